use super::FiniteGroup;
use crate::error::{Error, Result};
use crate::perm::{enumerate_sym, Permutation};

/// `Sym(L)` as an abstract group, keeping the permutation behind each element.
///
/// Element `i` is the `i`-th permutation in lexicographic order, so the
/// element index of a permutation is its `lex_rank`.
#[derive(Clone, Debug)]
pub struct SymmetricGroup {
    degree: usize,
    group: FiniteGroup,
    elements: Vec<Permutation>,
}

impl SymmetricGroup {
    pub const MIN_DEGREE: usize = 2;
    pub const MAX_DEGREE: usize = 6;

    pub fn new(degree: usize) -> Result<Self> {
        if !(Self::MIN_DEGREE..=Self::MAX_DEGREE).contains(&degree) {
            return Err(Error::DegreeOutOfRange {
                degree,
                min: Self::MIN_DEGREE,
                max: Self::MAX_DEGREE,
            });
        }
        let elements = enumerate_sym(degree)?;
        let labels = elements.iter().map(Permutation::compact).collect();
        // Row r, column s holds r ∘ s (s acts first).
        let rows = elements
            .iter()
            .map(|r| {
                elements
                    .iter()
                    .map(|s| r.compose(s).map(|rs| rs.lex_rank()))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            degree,
            group: FiniteGroup::from_table(labels, rows)?,
            elements,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn into_group(self) -> FiniteGroup {
        self.group
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, index: usize) -> &Permutation {
        &self.elements[index]
    }

    pub fn index_of(&self, perm: &Permutation) -> Result<usize> {
        if perm.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: perm.degree(),
                right: self.degree,
            });
        }
        Ok(perm.lex_rank())
    }

    /// Element indices of all transpositions `(i j)`.
    pub fn transpositions(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for i in 0..self.degree {
            for j in i + 1..self.degree {
                out.push(Permutation::transposition(self.degree, i, j).unwrap().lex_rank());
            }
        }
        out
    }

    /// Element indices of the adjacent transpositions `(i i+1)`.
    pub fn adjacent_transpositions(&self) -> Vec<usize> {
        (0..self.degree - 1)
            .map(|i| Permutation::transposition(self.degree, i, i + 1).unwrap().lex_rank())
            .collect()
    }
}

/// Multiplication table of `Sym(L)` for `2 ≤ L ≤ 6`, labelled by one-line forms.
pub fn build_symmetric(degree: usize) -> Result<FiniteGroup> {
    SymmetricGroup::new(degree).map(SymmetricGroup::into_group)
}

/// Cyclic group `{θ0, …, θ(n-1)}` with `θi ∗ θj = θ((i+j) mod n)`.
pub fn build_cyclic(order: usize) -> Result<FiniteGroup> {
    if order == 0 {
        return Err(Error::InvalidParameter("cyclic group order must be at least 1".into()));
    }
    let labels = (0..order).map(|i| format!("θ{i}")).collect();
    let rows = (0..order)
        .map(|i| (0..order).map(|j| (i + j) % order).collect())
        .collect();
    FiniteGroup::from_table(labels, rows)
}

/// Klein four-group `{e, a, b, c}`.
pub fn build_klein() -> FiniteGroup {
    let labels = ["e", "a", "b", "c"].map(String::from).to_vec();
    let rows = vec![
        vec![0, 1, 2, 3],
        vec![1, 0, 3, 2],
        vec![2, 3, 0, 1],
        vec![3, 2, 1, 0],
    ];
    FiniteGroup::from_table(labels, rows).expect("Klein table is a group")
}

impl FiniteGroup {
    /// Built-in groups by name: `symL` (2 ≤ L ≤ 6), `klein`, `cyclic:n`.
    pub fn builtin(name: &str) -> Result<FiniteGroup> {
        let lower = name.trim().to_ascii_lowercase();
        if lower == "klein" {
            return Ok(build_klein());
        }
        if let Some(n) = lower.strip_prefix("cyclic:") {
            let n = n
                .parse()
                .map_err(|_| Error::parse(name, "expected cyclic:<order>"))?;
            return build_cyclic(n);
        }
        if let Some(l) = lower.strip_prefix("sym") {
            let l = l.parse().map_err(|_| Error::parse(name, "expected sym<L>"))?;
            return build_symmetric(l);
        }
        Err(Error::parse(name, "expected symL, klein or cyclic:n"))
    }
}
