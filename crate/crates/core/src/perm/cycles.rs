use std::fmt;

use super::Permutation;

/// Disjoint-cycle factorization in canonical form.
///
/// Every cycle starts at its smallest point and cycles are sorted by that
/// point. Fixed points are kept as 1-cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleFactorization {
    degree: usize,
    cycles: Vec<Vec<usize>>,
}

impl CycleFactorization {
    pub fn of(perm: &Permutation) -> Self {
        let image = perm.as_slice();
        let mut seen = vec![false; image.len()];
        let mut cycles = Vec::new();
        // Scanning starts in increasing order, so each cycle is entered at its minimum.
        for start in 0..image.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = image[i];
            }
            cycles.push(cycle);
        }
        Self {
            degree: image.len(),
            cycles,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Cycles as 0-based points.
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Rebuilds the permutation: each cycle maps `i_k ↦ i_{k+1}` and the last point to the first.
    pub fn to_permutation(&self) -> Permutation {
        let mut image: Vec<usize> = (0..self.degree).collect();
        for cycle in &self.cycles {
            for (k, &i) in cycle.iter().enumerate() {
                image[i] = cycle[(k + 1) % cycle.len()];
            }
        }
        Permutation::from_vec_unchecked(image)
    }

    /// 1-based cycle notation such as `(1 4)(2)(3 5 6)`.
    pub fn display(&self, omit_fixed_points: bool) -> String {
        let mut out = String::new();
        for cycle in &self.cycles {
            if omit_fixed_points && cycle.len() == 1 {
                continue;
            }
            out.push('(');
            for (k, i) in cycle.iter().enumerate() {
                if k > 0 {
                    out.push(' ');
                }
                out.push_str(&(i + 1).to_string());
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Display for CycleFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display(false))
    }
}

pub(crate) fn count_cycles_in(image: &[usize]) -> usize {
    let mut seen = vec![false; image.len()];
    let mut count = 0;
    for start in 0..image.len() {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = image[i];
        }
    }
    count
}
