//! Executable inequalities relating the neighborhood degree sum indices to
//! classic degree-based indices.
//!
//! Each check records both sides, the relation, and whether equality is
//! expected on the graph it was evaluated on. The random suite drives every
//! proposition over random connected graphs plus a fixed set of graphs on
//! which the equality cases are known.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{GraphError, MolGraph};
use crate::indices::{compute_all, IndexError, IndexKind};

/// Relative tolerance for both inequality and equality decisions.
pub const BOUND_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BoundsError {
    #[error("sequence `{seq}` has a non-positive entry at position {pos}")]
    NonPositive { seq: &'static str, pos: usize },
    #[error("sequence `{seq}` has a negative entry at position {pos}")]
    Negative { seq: &'static str, pos: usize },
    #[error("sequences must be non-empty and of equal length")]
    Shape,
    #[error("t must be positive, got {0}")]
    NonPositiveExponent(f64),
    #[error("bounds require p·a ≤ b ≤ P·a; violated at position {0}")]
    OutOfBand(usize),
    #[error("unknown proposition `{0}`")]
    UnknownProposition(String),
    #[error(transparent)]
    Index(#[from] IndexError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
        })
    }
}

/// One instantiated inequality `lhs (<= | >=) rhs`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundCheck {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub relation: Relation,
    pub satisfied: bool,
    pub equality_expected: bool,
    /// `rhs - lhs`
    pub gap: f64,
}

impl BoundCheck {
    pub fn new(
        name: impl Into<String>,
        lhs: f64,
        relation: Relation,
        rhs: f64,
        equality_expected: bool,
    ) -> Self {
        let tol = tolerance(lhs, rhs);
        let satisfied = match relation {
            Relation::Le => lhs <= rhs + tol,
            Relation::Ge => lhs >= rhs - tol,
        };
        BoundCheck {
            name: name.into(),
            lhs,
            rhs,
            relation,
            satisfied,
            equality_expected,
            gap: rhs - lhs,
        }
    }

    pub fn is_tight(&self) -> bool {
        self.gap.abs() <= tolerance(self.lhs, self.rhs)
    }

    /// Satisfied, and tight wherever equality is expected.
    pub fn passed(&self) -> bool {
        self.satisfied && (!self.equality_expected || self.is_tight())
    }
}

fn tolerance(a: f64, b: f64) -> f64 {
    BOUND_TOLERANCE * 1f64.max(a.abs()).max(b.abs())
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= tolerance(a, b)
}

fn check_shape(lens: &[usize]) -> Result<(), BoundsError> {
    if lens[0] == 0 || lens.iter().any(|&l| l != lens[0]) {
        return Err(BoundsError::Shape);
    }
    Ok(())
}

fn check_positive(seq: &'static str, v: &[f64]) -> Result<(), BoundsError> {
    match v.iter().position(|&x| x <= 0.0 || x.is_nan()) {
        Some(pos) => Err(BoundsError::NonPositive { seq, pos }),
        None => Ok(()),
    }
}

/// Radon's inequality: `(Σx)^(t+1) / (Σy)^t <= Σ x^(t+1) / y^t`,
/// tight when `x` is proportional to `y`.
pub fn check_radon(xs: &[f64], ys: &[f64], t: f64) -> Result<BoundCheck, BoundsError> {
    check_shape(&[xs.len(), ys.len()])?;
    check_positive("xs", xs)?;
    check_positive("ys", ys)?;
    if t <= 0.0 || t.is_nan() {
        return Err(BoundsError::NonPositiveExponent(t));
    }
    let sx: f64 = xs.iter().sum();
    let sy: f64 = ys.iter().sum();
    let lhs = sx.powf(t + 1.0) / sy.powf(t);
    let rhs: f64 = xs.iter().zip(ys).map(|(x, y)| x.powf(t + 1.0) / y.powf(t)).sum();
    let k = xs[0] / ys[0];
    let proportional = xs.iter().zip(ys).all(|(x, y)| close(*x, k * y));
    Ok(BoundCheck::new("radon", lhs, Relation::Le, rhs, proportional))
}

/// `2·Σzx·Σwy <= Σw·Σz x² + Σz·Σw y²` for real `x`, `y` and non-negative
/// weights `z`, `w`; tight when `x` and `y` are the same constant.
pub fn check_weighted_am_gm(
    x: &[f64],
    y: &[f64],
    z: &[f64],
    w: &[f64],
) -> Result<BoundCheck, BoundsError> {
    check_shape(&[x.len(), y.len(), z.len(), w.len()])?;
    for (seq, v) in [("z", z), ("w", w)] {
        if let Some(pos) = v.iter().position(|&a| a < 0.0 || a.is_nan()) {
            return Err(BoundsError::Negative { seq, pos });
        }
    }
    let sum = |f: &dyn Fn(usize) -> f64| (0..x.len()).map(f).sum::<f64>();
    let (sz, sw) = (z.iter().sum::<f64>(), w.iter().sum::<f64>());
    let lhs = 2.0 * sum(&|i| z[i] * x[i]) * sum(&|i| w[i] * y[i]);
    let rhs = sw * sum(&|i| z[i] * x[i] * x[i]) + sz * sum(&|i| w[i] * y[i] * y[i]);
    let constant = x.iter().chain(y).all(|&v| close(v, x[0]));
    Ok(BoundCheck::new("weighted-am-gm", lhs, Relation::Le, rhs, constant))
}

/// `Σb² + pP·Σa² <= (P+p)·Σab` given `p·a_i <= b_i <= P·a_i`; tight when
/// every `b_i` sits on one of the two ends of its band.
pub fn check_band_sum(a: &[f64], b: &[f64], p: f64, big_p: f64) -> Result<BoundCheck, BoundsError> {
    check_shape(&[a.len(), b.len()])?;
    for (i, (&ai, &bi)) in a.iter().zip(b).enumerate() {
        let (lo, hi) = if ai >= 0.0 { (p * ai, big_p * ai) } else { (big_p * ai, p * ai) };
        if ai == 0.0 || bi < lo - tolerance(lo, bi) || bi > hi + tolerance(hi, bi) {
            return Err(BoundsError::OutOfBand(i));
        }
    }
    let lhs: f64 = b.iter().map(|v| v * v).sum::<f64>() + p * big_p * a.iter().map(|v| v * v).sum::<f64>();
    let rhs = (big_p + p) * a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>();
    let on_ends = a
        .iter()
        .zip(b)
        .all(|(&ai, &bi)| close(bi, p * ai) || close(bi, big_p * ai));
    Ok(BoundCheck::new("band-sum", lhs, Relation::Le, rhs, on_ends))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Proposition {
    /// `ND1 <= sqrt(m·M2*)`
    P1,
    /// `ND1 <= (m + M2*) / 2`
    P2,
    /// `sqrt(m·M2*) <= (m + M2*) / 2`: the first bound is the sharper one.
    Dominance,
    /// `ND6 <= F/2 + M2 + HMN/2 - MN`
    P3,
    /// `m·δN <= ND1 <= m·ΔN`
    P4i,
    /// `m/sqrt(2ΔN) <= ND2 <= m/sqrt(2δN)`
    P4ii,
    /// `2m·δN³ <= ND3 <= 2m·ΔN³`
    P4iii,
    /// `m/ΔN <= ND4 <= m/δN`
    P4iv,
    /// `(FN* - 2M2*)/ΔN² + 2m <= ND5 <= (FN* - 2M2*)/δN² + 2m`
    P4v,
    /// `ND1 >= (M2* + m·δN·ΔN) / (δN + ΔN)`
    P5,
    /// `ND5 >= 2m² / GA5`
    P6i,
    /// `ND5 >= 4·M2² / (m·ΔN²) - 2m`
    P6ii,
    /// Six comparisons against classic indices, tight only on P2:
    /// `ND1 >= RR`, `ND2 <= SCI`, `ND3 >= ReZG3`, `ND4 <= R`,
    /// `ND5 <= 2·M2`, `ND6 >= 2·M2`.
    P7,
}

impl Proposition {
    pub const ALL: [Proposition; 13] = [
        Proposition::P1,
        Proposition::P2,
        Proposition::Dominance,
        Proposition::P3,
        Proposition::P4i,
        Proposition::P4ii,
        Proposition::P4iii,
        Proposition::P4iv,
        Proposition::P4v,
        Proposition::P5,
        Proposition::P6i,
        Proposition::P6ii,
        Proposition::P7,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Proposition::P1 => "P1",
            Proposition::P2 => "P2",
            Proposition::Dominance => "P1-vs-P2",
            Proposition::P3 => "P3",
            Proposition::P4i => "P4i",
            Proposition::P4ii => "P4ii",
            Proposition::P4iii => "P4iii",
            Proposition::P4iv => "P4iv",
            Proposition::P4v => "P4v",
            Proposition::P5 => "P5",
            Proposition::P6i => "P6i",
            Proposition::P6ii => "P6ii",
            Proposition::P7 => "P7",
        }
    }
}

impl fmt::Display for Proposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Proposition {
    type Err = BoundsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Proposition::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| BoundsError::UnknownProposition(s.to_string()))
    }
}

const NEEDED: [IndexKind; 17] = [
    IndexKind::ND1,
    IndexKind::ND2,
    IndexKind::ND3,
    IndexKind::ND4,
    IndexKind::ND5,
    IndexKind::ND6,
    IndexKind::R,
    IndexKind::RR,
    IndexKind::M2,
    IndexKind::F,
    IndexKind::SCI,
    IndexKind::ReZG3,
    IndexKind::M2star,
    IndexKind::MN,
    IndexKind::HMN,
    IndexKind::FNstar,
    IndexKind::GA5,
];

/// Index values and graph invariants shared by all propositions.
struct Inputs {
    v: [f64; NEEDED.len()],
    m: f64,
    lo: f64,
    hi: f64,
    constant_nbd: bool,
    is_p2: bool,
}

impl Inputs {
    fn new(g: &MolGraph) -> Result<Self, BoundsError> {
        let vals = compute_all(g, &NEEDED)?;
        let mut v = [0.0; NEEDED.len()];
        for (slot, iv) in v.iter_mut().zip(vals) {
            *slot = iv.value;
        }
        let ext = g.profile().extrema()?;
        Ok(Inputs {
            v,
            m: g.edge_count() as f64,
            lo: ext.delta_min as f64,
            hi: ext.delta_max as f64,
            constant_nbd: g.is_regular() || g.is_complete_bipartite(),
            is_p2: g.vertex_count() == 2,
        })
    }

    fn get(&self, k: IndexKind) -> f64 {
        let i = NEEDED.iter().position(|&n| n == k).expect("index is precomputed");
        self.v[i]
    }
}

/// Evaluates one proposition on `g`. Two-sided bounds yield a lower and an
/// upper check; the final proposition yields one check per comparison.
pub fn check_proposition(g: &MolGraph, which: Proposition) -> Result<Vec<BoundCheck>, BoundsError> {
    let x = Inputs::new(g)?;
    Ok(evaluate(&x, which))
}

fn evaluate(x: &Inputs, which: Proposition) -> Vec<BoundCheck> {
    use IndexKind::*;
    use Relation::{Ge, Le};

    let (m, lo, hi) = (x.m, x.lo, x.hi);
    let eq = x.constant_nbd;
    let nd = |k| x.get(k);
    let sandwich = |name: &str, low: f64, val: f64, high: f64| {
        vec![
            BoundCheck::new(format!("{name}.lower"), low, Le, val, eq),
            BoundCheck::new(format!("{name}.upper"), val, Le, high, eq),
        ]
    };

    match which {
        Proposition::P1 => vec![BoundCheck::new("P1", nd(ND1), Le, (m * nd(M2star)).sqrt(), eq)],
        Proposition::P2 => vec![BoundCheck::new("P2", nd(ND1), Le, (m + nd(M2star)) / 2.0, x.is_p2)],
        Proposition::Dominance => vec![BoundCheck::new(
            "P1-vs-P2",
            (m * nd(M2star)).sqrt(),
            Le,
            (m + nd(M2star)) / 2.0,
            x.is_p2,
        )],
        Proposition::P3 => vec![BoundCheck::new(
            "P3",
            nd(ND6),
            Le,
            nd(F) / 2.0 + nd(M2) + nd(HMN) / 2.0 - nd(MN),
            x.is_p2,
        )],
        Proposition::P4i => sandwich("P4i", m * lo, nd(ND1), m * hi),
        Proposition::P4ii => sandwich(
            "P4ii",
            m / (2.0 * hi).sqrt(),
            nd(ND2),
            m / (2.0 * lo).sqrt(),
        ),
        Proposition::P4iii => sandwich("P4iii", 2.0 * m * lo.powi(3), nd(ND3), 2.0 * m * hi.powi(3)),
        Proposition::P4iv => sandwich("P4iv", m / hi, nd(ND4), m / lo),
        Proposition::P4v => {
            let spread = nd(FNstar) - 2.0 * nd(M2star);
            sandwich(
                "P4v",
                spread / (hi * hi) + 2.0 * m,
                nd(ND5),
                spread / (lo * lo) + 2.0 * m,
            )
        }
        Proposition::P5 => vec![BoundCheck::new(
            "P5",
            nd(ND1),
            Ge,
            (nd(M2star) + m * lo * hi) / (lo + hi),
            eq,
        )],
        Proposition::P6i => vec![BoundCheck::new("P6i", nd(ND5), Ge, 2.0 * m * m / nd(GA5), eq)],
        Proposition::P6ii => vec![BoundCheck::new(
            "P6ii",
            nd(ND5),
            Ge,
            4.0 * nd(M2).powi(2) / (m * hi * hi) - 2.0 * m,
            eq,
        )],
        Proposition::P7 => {
            let p2 = x.is_p2;
            vec![
                BoundCheck::new("P7.ND1>=RR", nd(ND1), Ge, nd(RR), p2),
                BoundCheck::new("P7.ND2<=SCI", nd(ND2), Le, nd(SCI), p2),
                BoundCheck::new("P7.ND3>=ReZG3", nd(ND3), Ge, nd(ReZG3), p2),
                BoundCheck::new("P7.ND4<=R", nd(ND4), Le, nd(R), p2),
                BoundCheck::new("P7.ND5<=2M2", nd(ND5), Le, 2.0 * nd(M2), p2),
                BoundCheck::new("P7.ND6>=2M2", nd(ND6), Ge, 2.0 * nd(M2), p2),
            ]
        }
    }
}

/// Every proposition on one graph.
pub fn check_all(g: &MolGraph) -> Result<Vec<BoundCheck>, BoundsError> {
    let x = Inputs::new(g)?;
    Ok(Proposition::ALL.iter().flat_map(|&p| evaluate(&x, p)).collect())
}

/// A check together with the graph it was evaluated on.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteEntry {
    pub graph: String,
    #[serde(flatten)]
    pub check: BoundCheck,
}

/// Graphs on which the equality cases are known; always part of a suite run.
pub fn equality_case_graphs() -> Vec<(String, MolGraph)> {
    let build = |name: &str, g: Result<MolGraph, GraphError>| (name.to_string(), g.expect("fixed graph"));
    vec![
        build("P2", MolGraph::path(2)),
        build("C4", MolGraph::cycle(4)),
        build("C5", MolGraph::cycle(5)),
        build("C6", MolGraph::cycle(6)),
        build("K3", MolGraph::complete(3)),
        build("K4", MolGraph::complete(4)),
        build("K5", MolGraph::complete(5)),
        build("K1,3", MolGraph::star(3)),
        build("K2,3", MolGraph::complete_bipartite(2, 3)),
        build("K3,3", MolGraph::complete_bipartite(3, 3)),
        build("K2,4", MolGraph::complete_bipartite(2, 4)),
    ]
}

/// Uniform random labelled spanning tree on `n` vertices (via a Prüfer
/// sequence) plus each remaining vertex pair with probability `p`.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> MolGraph {
    assert!(n >= 2, "need at least two vertices");
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut edges = prufer_decode(&seq, n);
    let mut present = vec![vec![false; n]; n];
    for &(u, v) in &edges {
        present[u][v] = true;
        present[v][u] = true;
    }
    for u in 0..n {
        for v in u + 1..n {
            if !present[u][v] && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    MolGraph::new(n, &edges).expect("spanning tree keeps the graph connected")
}

fn prufer_decode(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always exists");
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Runs every proposition on the equality-case graphs and on `trials`
/// random connected graphs with 2..=`n_max` vertices.
///
/// Each trial draws from its own ChaCha stream, so the output depends only
/// on `seed`, never on evaluation order.
pub fn random_graph_suite(trials: usize, n_max: usize, seed: u64) -> Result<Vec<SuiteEntry>, BoundsError> {
    let n_max = n_max.max(2);
    let mut graphs = equality_case_graphs();
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial as u64);
        let n = rng.gen_range(2..=n_max);
        // A third of the trials are trees, the rest get random extra edges.
        let p = if rng.gen_bool(1.0 / 3.0) { 0.0 } else { rng.gen_range(0.0..0.7) };
        let g = random_connected_graph(&mut rng, n, p);
        graphs.push((format!("random#{trial}(n={n},m={})", g.edge_count()), g));
    }

    let mut out = Vec::new();
    for (name, g) in graphs {
        for check in check_all(&g)? {
            out.push(SuiteEntry {
                graph: name.clone(),
                check,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn checks(g: &MolGraph, p: Proposition) -> Vec<BoundCheck> {
        check_proposition(g, p).unwrap()
    }

    #[test]
    fn radon_examples() {
        let c = check_radon(&[1.0, 1.0], &[1.0, 1.0], 1.0).unwrap();
        assert!(c.satisfied && c.equality_expected && c.is_tight());

        let c = check_radon(&[1.0, 2.0], &[2.0, 1.0], 1.0).unwrap();
        assert_eq!((c.lhs, c.rhs), (3.0, 4.5));
        assert!(c.satisfied && !c.is_tight());

        let c = check_radon(&[3.0], &[5.0], 2.0).unwrap();
        assert!(c.is_tight() && c.equality_expected);

        assert_eq!(
            check_radon(&[1.0, 0.0], &[1.0, 1.0], 1.0),
            Err(BoundsError::NonPositive { seq: "xs", pos: 1 })
        );
        assert_eq!(check_radon(&[1.0], &[1.0, 2.0], 1.0), Err(BoundsError::Shape));
    }

    #[test]
    fn lemma_checkers() {
        let c = check_weighted_am_gm(&[2.0, 2.0], &[2.0, 2.0], &[1.0, 3.0], &[2.0, 0.5]).unwrap();
        assert!(c.passed() && c.equality_expected);
        let c = check_weighted_am_gm(&[1.0, -3.0], &[0.5, 2.0], &[1.0, 3.0], &[2.0, 0.5]).unwrap();
        assert!(c.satisfied && !c.equality_expected);

        let c = check_band_sum(&[1.0, 2.0], &[1.0, 6.0], 1.0, 3.0).unwrap();
        assert!(c.passed() && c.equality_expected);
        let c = check_band_sum(&[1.0, 2.0], &[2.0, 3.0], 1.0, 3.0).unwrap();
        assert!(c.satisfied && !c.is_tight());
        assert_eq!(
            check_band_sum(&[1.0], &[5.0], 1.0, 3.0),
            Err(BoundsError::OutOfBand(0))
        );
    }

    #[test]
    fn cycle_is_tight_for_p1() {
        let c = &checks(&MolGraph::cycle(6).unwrap(), Proposition::P1)[0];
        assert_eq!(c.lhs, 24.0);
        assert!((c.rhs - (6.0f64 * 96.0).sqrt()).abs() < 1e-12);
        assert!(c.passed() && c.is_tight());
    }

    #[test]
    fn p2_graph_is_tight_for_p2_p3_p7() {
        let g = MolGraph::path(2).unwrap();
        for p in [Proposition::P2, Proposition::P3, Proposition::P7] {
            for c in checks(&g, p) {
                assert!(c.equality_expected && c.is_tight(), "{c:?}");
            }
        }
    }

    #[test]
    fn octane_p6i_is_strict() {
        let c = &checks(&MolGraph::path(8).unwrap(), Proposition::P6i)[0];
        assert!((c.lhs - 14.5).abs() < 1e-12);
        assert!((c.rhs - 98.0 / 6.939080).abs() < 1e-4);
        assert!(c.satisfied && !c.is_tight());
    }

    #[test]
    fn complete_bipartite_is_tight_for_p4i() {
        let cs = checks(&MolGraph::complete_bipartite(2, 3).unwrap(), Proposition::P4i);
        assert_eq!(cs.len(), 2);
        for c in cs {
            assert_eq!((c.lhs, c.rhs), (36.0, 36.0));
            assert!(c.passed());
        }
    }

    #[test]
    fn final_proposition_directions_on_small_trees() {
        // P3 path: δ = (2, 2, 2), ND6 = 12 > 2·M2 = 8, ND4 = 1 < R = 1.414.
        let cs = checks(&MolGraph::path(3).unwrap(), Proposition::P7);
        assert!(cs.iter().all(BoundCheck::satisfied_strictly));
        let cs = checks(&MolGraph::star(4).unwrap(), Proposition::P7);
        assert!(cs.iter().all(BoundCheck::satisfied_strictly));
    }

    #[test]
    fn suite_is_deterministic_and_passes() {
        let a = random_graph_suite(60, 10, 42).unwrap();
        let b = random_graph_suite(60, 10, 42).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(|e| e.check.passed()), "{:?}", a.iter().find(|e| !e.check.passed()));
    }

    #[test]
    fn zero_trials_keep_forced_graphs() {
        let entries = random_graph_suite(0, 10, 7).unwrap();
        let graphs: std::collections::BTreeSet<_> = entries.iter().map(|e| e.graph.as_str()).collect();
        assert_eq!(graphs.len(), equality_case_graphs().len());
    }

    #[test]
    fn proposition_names_round_trip() {
        for p in Proposition::ALL {
            assert_eq!(p.name().parse::<Proposition>().unwrap(), p);
        }
        assert!("P9".parse::<Proposition>().is_err());
    }

    impl BoundCheck {
        fn satisfied_strictly(&self) -> bool {
            self.satisfied && !self.is_tight()
        }
    }
}
