//! Acceptance gate. Every criterion runs even when an earlier one fails, and
//! each prints a single PASS/FAIL line; the process exits nonzero if any
//! criterion failed.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use groupdist::embed::Variant;
use groupdist::seriesmetrics::{windowed_distances, Domain, Exponent, GroupSeries, PermutationMetric};
use groupdist::simulate::{experiment_distances, run_experiment, ExperimentConfig, ExperimentMetric, HenonConfig};
use groupdist::{
    build_cyclic, build_klein, build_symmetric, enumerate_sym, kendall_distance, scaling_factor, AdjacencyGraph,
    CayleyEmbedding, DistanceMatrix, FiniteGroup, GeneratingSet, Metric, Permutation, SymmetricGroup,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

struct Gate {
    failed: Vec<usize>,
}

impl Gate {
    fn run(&mut self, id: usize, title: &str, limit: Duration, check: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let outcome = match catch_unwind(AssertUnwindSafe(check)) {
            Ok(o) => o,
            Err(panic) => Err(panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into())),
        };
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > limit => Err(format!("{detail}; took {elapsed:.2?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS criterion {id:>2} [{title}] {detail} ({elapsed:.2?})"),
            Err(detail) => {
                println!("FAIL criterion {id:>2} [{title}] {detail} ({elapsed:.2?})");
                self.failed.push(id);
            }
        }
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn compare_table(name: &str, actual: &[Vec<usize>], expected: &[Vec<usize>]) -> Result<usize, String> {
    ensure(actual.len() == expected.len(), || {
        format!("{name}: {} rows, expected {}", actual.len(), expected.len())
    })?;
    let mut entries = 0;
    for (i, (a, e)) in actual.iter().zip(expected).enumerate() {
        ensure(a == e, || format!("{name}: row {i} is {a:?}, expected {e:?}"))?;
        entries += a.len();
    }
    Ok(entries)
}

fn rows<const N: usize>(table: [[usize; N]; N]) -> Vec<Vec<usize>> {
    table.iter().map(|r| r.to_vec()).collect()
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// Reads a golden table: `#` comments, a header `. label label …`, then one
/// `label v v …` line per row.
fn golden(path: &str) -> (Vec<String>, Vec<Vec<usize>>) {
    let text = std::fs::read_to_string(format!("{}/tests/data/{path}", env!("CARGO_MANIFEST_DIR"))).unwrap();
    let mut lines = text.lines().filter(|l| !l.trim().is_empty() && !l.starts_with('#'));
    let header: Vec<String> = lines.next().unwrap().split_whitespace().skip(1).map(String::from).collect();
    let mut values = Vec::new();
    for (i, line) in lines.enumerate() {
        let mut tokens = line.split_whitespace();
        assert_eq!(tokens.next(), Some(header[i].as_str()), "row label {i} in {path}");
        values.push(tokens.map(|t| t.parse().unwrap()).collect());
    }
    (header, values)
}

fn sym3_base() -> Outcome {
    let cayley = rows([
        [0, 1, 1, 2, 2, 1],
        [1, 0, 2, 1, 1, 2],
        [1, 2, 0, 1, 1, 2],
        [2, 1, 1, 0, 2, 1],
        [2, 1, 1, 2, 0, 1],
        [1, 2, 2, 1, 1, 0],
    ]);
    let kendall = rows([
        [0, 1, 1, 2, 2, 3],
        [1, 0, 2, 3, 1, 2],
        [1, 2, 0, 1, 3, 2],
        [2, 3, 1, 0, 2, 1],
        [2, 1, 3, 2, 0, 1],
        [3, 2, 2, 1, 1, 0],
    ]);
    let c = DistanceMatrix::symmetric_group(3, Metric::Cayley).map_err(err)?;
    let k = DistanceMatrix::symmetric_group(3, Metric::Kendall).map_err(err)?;
    ensure(c.labels() == ["123", "132", "213", "231", "312", "321"], || {
        format!("labels {:?}", c.labels())
    })?;
    let n = compare_table("cayley", c.rows(), &cayley)? + compare_table("kendall", k.rows(), &kendall)?;
    Ok(format!("{n} entries match"))
}

fn sym4_base() -> Outcome {
    let mut n = 0;
    for (metric, file) in [(Metric::Cayley, "sym4_cayley.txt"), (Metric::Kendall, "sym4_kendall.txt")] {
        let (labels, expected) = golden(file);
        let m = DistanceMatrix::symmetric_group(4, metric).map_err(err)?;
        ensure(m.labels() == labels.as_slice(), || format!("{file}: label order differs"))?;
        n += compare_table(file, m.rows(), &expected)?;
    }
    Ok(format!("{n} entries match"))
}

fn embedded_tables() -> Outcome {
    let left = |g: FiniteGroup, metric| -> Result<Vec<Vec<usize>>, String> {
        let emb = CayleyEmbedding::new(g, Variant::Left).map_err(err)?;
        Ok(emb.distance_matrix(metric).map_err(err)?.rows().to_vec())
    };
    let sym3 = build_symmetric(3).map_err(err)?;
    let mut n = compare_table(
        "Sym(3) cayley",
        &left(sym3.clone(), Metric::Cayley)?,
        &rows([
            [0, 3, 3, 4, 4, 3],
            [3, 0, 4, 3, 3, 4],
            [3, 4, 0, 3, 3, 4],
            [4, 3, 3, 0, 4, 3],
            [4, 3, 3, 4, 0, 3],
            [3, 4, 4, 3, 3, 0],
        ]),
    )?;
    n += compare_table(
        "Sym(3) kendall",
        &left(sym3, Metric::Kendall)?,
        &rows([
            [0, 5, 5, 10, 10, 15],
            [5, 0, 10, 15, 5, 10],
            [5, 10, 0, 5, 15, 10],
            [10, 15, 5, 0, 10, 5],
            [10, 5, 15, 10, 0, 5],
            [15, 10, 10, 5, 5, 0],
        ]),
    )?;
    n += compare_table(
        "Klein cayley",
        &left(build_klein(), Metric::Cayley)?,
        &rows([[0, 2, 2, 2], [2, 0, 2, 2], [2, 2, 0, 2], [2, 2, 2, 0]]),
    )?;
    n += compare_table(
        "Klein kendall",
        &left(build_klein(), Metric::Kendall)?,
        &rows([[0, 2, 4, 6], [2, 0, 6, 4], [4, 6, 0, 2], [6, 4, 2, 0]]),
    )?;
    let z4 = rows([[0, 3, 4, 3], [3, 0, 3, 4], [4, 3, 0, 3], [3, 4, 3, 0]]);
    let cyclic = build_cyclic(4).map_err(err)?;
    n += compare_table("Z4 kendall left", &left(cyclic.clone(), Metric::Kendall)?, &z4)?;
    let right = CayleyEmbedding::new(cyclic, Variant::Right)
        .and_then(|e| e.distance_matrix(Metric::Kendall))
        .map_err(err)?;
    n += compare_table("Z4 kendall right", right.rows(), &z4)?;
    Ok(format!("{n} entries match"))
}

fn scaling() -> Outcome {
    let expected = [(3, 3, 36), (4, 46, 576), (5, 714, 14400)];
    let mut report = Vec::new();
    let mut ok = true;
    for (degree, factor, pairs) in expected {
        let check = scaling_factor(degree).map_err(err)?;
        let good = check.factor == Some(factor) && check.pairs_checked == pairs;
        ok &= good;
        report.push(match (good, check.factor) {
            (true, _) => format!("L={degree}: {factor} over {pairs} pairs"),
            (false, Some(k)) => format!(
                "L={degree}: exhaustive factor is {k} over {} pairs, expected {factor}",
                check.pairs_checked
            ),
            (false, None) => format!("L={degree}: not proportional, witness {:?}", check.witness),
        });
    }
    let report = report.join("; ");
    if ok {
        Ok(report)
    } else {
        Err(report)
    }
}

fn word_metric() -> Outcome {
    let z4 = GeneratingSet::from_labels(build_cyclic(4).map_err(err)?, &["θ1"]).map_err(err)?;
    let table = z4.distance_table().map_err(err)?;
    let printed = rows([[0, 1, 2, 3], [1, 0, 1, 2], [2, 1, 0, 1], [3, 2, 1, 0]]);
    let z4_result = compare_table("Z4 word metric", table.rows(), &printed);

    let mut pairs = 0;
    for degree in 2..=4 {
        let sym = SymmetricGroup::new(degree).map_err(err)?;
        let all = GeneratingSet::new(sym.group().clone(), &sym.transpositions()).map_err(err)?;
        let adjacent = GeneratingSet::new(sym.group().clone(), &sym.adjacent_transpositions()).map_err(err)?;
        let n = sym.group().order();
        for a in 0..n {
            for b in 0..n {
                let (r, s) = (sym.element(a), sym.element(b));
                let dc = Metric::Cayley.distance(r, s).map_err(err)?;
                let dk = Metric::Kendall.distance(r, s).map_err(err)?;
                let (wc, wk) = (all.distance(a, b).map_err(err)?, adjacent.distance(a, b).map_err(err)?);
                ensure(wc == dc && wk == dk, || {
                    format!("Sym({degree}) {r} {s}: word {wc}/{wk}, d_C/d_K {dc}/{dk}")
                })?;
                pairs += 1;
            }
        }
    }
    let sym_part = format!("Sym(2..4) word metrics match d_C and d_K on {pairs} pairs");
    match z4_result {
        Ok(_) => Ok(format!("Z4 table matches; {sym_part}")),
        Err(e) => Err(format!(
            "{e} (an inverse-closed word metric on Z4 is the circular distance, row 0 = {:?}); {sym_part}",
            table.row(0)
        )),
    }
}

fn bfs_oracle() -> Outcome {
    let mut pairs = 0;
    for degree in [3, 4] {
        let graph = AdjacencyGraph::kendall(degree).map_err(err)?;
        let nodes = graph.nodes();
        for (i, r) in nodes.iter().enumerate() {
            let paths = graph.shortest_paths_from(i);
            for (j, s) in nodes.iter().enumerate() {
                let dk = kendall_distance(r, s).map_err(err)?;
                ensure(paths[j] == Some(dk), || format!("{r} {s}: BFS {:?}, d_K {dk}", paths[j]))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs agree"))
}

fn worked_example() -> Outcome {
    let r: Permutation = "462531".parse().map_err(err)?;
    let s: Permutation = "236514".parse().map_err(err)?;
    let rel = s.inverse().compose(&r).map_err(err)?;
    let (dc, dk) = (
        Metric::Cayley.distance(&r, &s).map_err(err)?,
        Metric::Kendall.distance(&r, &s).map_err(err)?,
    );
    let got = (rel.compact(), rel.count_cycles(), rel.count_inversions(), dc, dk);
    ensure(got == ("631425".to_string(), 2, 8, 4, 8), || format!("got {got:?}"))?;
    Ok("s⁻¹∘r = 631425, 2 cycles, 8 inversions, d_C = 4, d_K = 8".into())
}

/// Counts positivity, symmetry and triangle violations over all triples.
fn axiom_violations(n: usize, d: impl Fn(usize, usize) -> usize) -> usize {
    let m: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| d(i, j)).collect()).collect();
    let mut bad = 0;
    for i in 0..n {
        for j in 0..n {
            bad += usize::from((m[i][j] == 0) != (i == j));
            bad += usize::from(m[i][j] != m[j][i]);
            for k in 0..n {
                bad += usize::from(m[i][k] > m[i][j] + m[j][k]);
            }
        }
    }
    bad
}

fn metric_axioms() -> Outcome {
    let mut report = Vec::new();
    let mut violations = 0;

    for degree in 1..=4 {
        let perms = enumerate_sym(degree).map_err(err)?;
        for metric in [Metric::Cayley, Metric::Kendall] {
            violations += axiom_violations(perms.len(), |i, j| metric.distance(&perms[i], &perms[j]).unwrap());
        }
    }
    report.push("exhaustive d_C, d_K for L ≤ 4".to_string());

    let mut rng = ChaCha8Rng::seed_from_u64(0xac1d);
    for _ in 0..10_000 {
        let degree = rng.gen_range(1..=8);
        let mut triple = (0..3).map(|_| {
            let mut v: Vec<usize> = (0..degree).collect();
            v.shuffle(&mut rng);
            Permutation::from_zero_based(v).unwrap()
        });
        let (r, s, t) = (triple.next().unwrap(), triple.next().unwrap(), triple.next().unwrap());
        for metric in [Metric::Cayley, Metric::Kendall] {
            let d = |a: &Permutation, b: &Permutation| metric.distance(a, b).unwrap();
            violations += usize::from((d(&r, &s) == 0) != (r == s));
            violations += usize::from(d(&r, &s) != d(&s, &r));
            violations += usize::from(d(&r, &t) > d(&r, &s) + d(&s, &t));
        }
    }
    report.push("10^4 random triples L ≤ 8".to_string());

    let sym3 = SymmetricGroup::new(3).map_err(err)?;
    let sym4 = SymmetricGroup::new(4).map_err(err)?;
    let groups: Vec<(&str, FiniteGroup, Vec<Vec<usize>>)> = vec![
        ("Klein", build_klein(), vec![vec![1, 2]]),
        ("Z4", build_cyclic(4).map_err(err)?, vec![vec![1]]),
        ("Z6", build_cyclic(6).map_err(err)?, vec![vec![1], vec![2, 3]]),
        (
            "Sym(3)",
            sym3.group().clone(),
            vec![sym3.transpositions(), sym3.adjacent_transpositions()],
        ),
        (
            "Sym(4)",
            sym4.group().clone(),
            vec![sym4.transpositions(), sym4.adjacent_transpositions()],
        ),
    ];
    for (name, group, generator_sets) in groups {
        let n = group.order();
        let mut embeddings = 0;
        for variant in [Variant::Left, Variant::Right, Variant::Adjoint] {
            let Ok(emb) = CayleyEmbedding::new(group.clone(), variant) else {
                continue;
            };
            embeddings += 1;
            for metric in [Metric::Cayley, Metric::Kendall] {
                violations += axiom_violations(n, |a, b| emb.distance(metric, a, b).unwrap());
            }
        }
        for gens in &generator_sets {
            let set = GeneratingSet::new(group.clone(), gens).map_err(err)?;
            violations += axiom_violations(n, |a, b| set.distance(a, b).unwrap());
        }
        report.push(format!(
            "{name}: {embeddings} embeddings, {} generating sets",
            generator_sets.len()
        ));
    }

    let report = format!("{violations} violations ({})", report.join(", "));
    if violations == 0 {
        Ok(report)
    } else {
        Err(report)
    }
}

fn henon_config(coupling: f64, degree: usize, metric: ExperimentMetric) -> ExperimentConfig {
    ExperimentConfig {
        henon: HenonConfig::with_coupling(coupling),
        degree,
        metric,
        ..ExperimentConfig::default()
    }
}

fn henon_supports() -> Outcome {
    let mut report = Vec::new();
    for degree in [4, 5] {
        let max = degree * (degree - 1) / 2;
        let factor = scaling_factor(degree)
            .map_err(err)?
            .factor
            .ok_or_else(|| format!("L={degree}: no scaling factor"))?;
        for (coupling, regime) in [(0.30, "mixed"), (1.10, "synchronized"), (0.55, "gapped")] {
            let start = Instant::now();
            let base = run_experiment(&henon_config(coupling, degree, ExperimentMetric::Kendall)).map_err(err)?;
            let elapsed = start.elapsed();
            ensure(elapsed < Duration::from_secs(30), || {
                format!("L={degree} C={coupling}: run took {elapsed:.2?}")
            })?;
            let realized = base.realized();
            let has = |v: usize| realized.contains(&(v as f64));
            let shape_ok = match regime {
                "mixed" => (0..=max).all(has),
                "synchronized" => has(0) && !has(max),
                _ => !has(1),
            };
            ensure(shape_ok, || {
                format!("L={degree} C={coupling}: realized support {realized:?}")
            })?;

            let embedded =
                run_experiment(&henon_config(coupling, degree, ExperimentMetric::EmbeddedKendall)).map_err(err)?;
            let rescaled = embedded.rescaled(factor as f64);
            ensure(
                rescaled.support == base.support && rescaled.probabilities == base.probabilities,
                || format!("L={degree} C={coupling}: embedded histogram ÷ {factor} differs"),
            )?;
        }
        report.push(format!("L={degree} shapes hold, embedded ÷ {factor} identical"));
    }
    Ok(report.join("; "))
}

fn lp_suite() -> Outcome {
    let distances = |p| {
        let cfg = ExperimentConfig {
            window: 4,
            p,
            ..henon_config(0.30, 3, ExperimentMetric::Kendall)
        };
        experiment_distances(&cfg).map(|(d, _)| d.values().to_vec()).map_err(err)
    };
    let (d1, d2, dinf) = (
        distances(Exponent::One)?,
        distances(Exponent::Two)?,
        distances(Exponent::Infinity)?,
    );
    ensure(d1.len() == d2.len() && d2.len() == dinf.len(), || "length mismatch".into())?;
    for t in 0..d1.len() {
        ensure(d1[t] + 1e-12 >= d2[t] && d2[t] + 1e-12 >= dinf[t], || {
            format!("t={t}: {} {} {}", d1[t], d2[t], dinf[t])
        })?;
    }

    let series = |forms: &str| GroupSeries::parse(Domain::Symmetric(3), forms).map_err(err);
    let a = series("123\n213\n123\n123")?;
    let b = series("321\n231\n231\n123")?;
    let k = PermutationMetric::new(3, Metric::Kendall).map_err(err)?;
    let at = |p| windowed_distances(&a, &b, &k, 4, p).map(|d| d.values()[0]).map_err(err);
    let (w1, w2, winf) = (at(Exponent::One)?, at(Exponent::Two)?, at(Exponent::Infinity)?);
    ensure(w1 == 6.0 && (w2 - 14f64.sqrt()).abs() <= 1e-12 && winf == 3.0, || {
        format!("window example gave {w1}, {w2}, {winf}")
    })?;
    Ok(format!("monotone on {} windows; example 6, √14, 3", d1.len()))
}

fn performance() -> Outcome {
    let build = Instant::now();
    let sym = SymmetricGroup::new(6).map_err(err)?;
    let emb = CayleyEmbedding::new(sym.group().clone(), Variant::Left).map_err(err)?;
    let build = build.elapsed();

    let mut rng = ChaCha8Rng::seed_from_u64(720);
    let pairs: Vec<(usize, usize)> = (0..10_000).map(|_| (rng.gen_range(0..720), rng.gen_range(0..720))).collect();

    let start = Instant::now();
    let mut total = 0;
    for &(a, b) in &pairs {
        total += emb.distance(Metric::Kendall, a, b).map_err(err)?;
    }
    let embedded = start.elapsed();

    let perms = enumerate_sym(6).map_err(err)?;
    let start = Instant::now();
    let mut base_total = 0;
    for &(a, b) in &pairs {
        base_total += kendall_distance(&perms[a], &perms[b]).map_err(err)?;
    }
    let base = start.elapsed();

    let report = format!(
        "10000 pairs: embedded {embedded:.2?} (sum {total}), base {base:.2?} (sum {base_total}); \
         Sym(6) table and embedding built in {build:.2?}"
    );
    ensure(embedded < Duration::from_secs(30) && base < Duration::from_secs(1), || report.clone())?;
    Ok(report)
}

fn main() {
    let mut gate = Gate { failed: Vec::new() };
    let secs = Duration::from_secs;
    gate.run(1, "Sym(3) base tables", secs(1), sym3_base);
    gate.run(2, "Sym(4) base tables", secs(1), sym4_base);
    gate.run(3, "embedded tables", secs(1), embedded_tables);
    gate.run(4, "scaling factors", secs(30), scaling);
    gate.run(5, "word metric", secs(10), word_metric);
    gate.run(6, "Kendall BFS oracle", secs(5), bfs_oracle);
    gate.run(7, "worked example", Duration::MAX, worked_example);
    gate.run(8, "metric axioms", Duration::MAX, metric_axioms);
    gate.run(9, "Hénon supports", Duration::MAX, henon_supports);
    gate.run(10, "l_p monotonicity", Duration::MAX, lp_suite);
    gate.run(11, "Sym(6) performance", Duration::MAX, performance);
    if gate.failed.is_empty() {
        println!("acceptance: all criteria passed");
    } else {
        println!("acceptance: failed criteria {:?}", gate.failed);
        std::process::exit(1);
    }
}
