//! Betti-number pipelines for the real toric manifold of a building set.
//!
//! Two independent engines compute the same numbers: the alternating route
//! counts alternating B-permutations of restricted building sets (valid for
//! connected chordal inputs), while the homology oracle computes reduced
//! simplicial homology of parity subcomplexes of the nested set complex and
//! needs only connectivity. `compare_methods` runs both and reports per-subset
//! agreement or mismatch; for graphical building sets a third route sums
//! a-numbers of induced subgraphs.

use crate::building::BuildingSet;
use crate::complex::{induced_parity_subcomplex, ComplexError};
use crate::graph::SimpleGraph;
use crate::hochschild::{count_alt_hoch, MAX_TOTAL};
use crate::homology::reduced_betti;
use crate::perm::{count_alternating_b_permutations, descent_histogram_of_b_permutations, PermEngineError};
use crate::set::ElementSet;
use rayon::prelude::*;
use std::collections::{BTreeMap, HashMap};
use std::time::{Duration, Instant};
use thiserror::Error;

/// Ground-set cap for the alternating pipeline (a sweep over all even
/// subsets with a permutation backtrack per subset).
pub const ALTERNATING_GROUND_BOUND: usize = 16;
/// Ground-set cap for the homology oracle (a simplicial complex and two
/// boundary-matrix ranks per even subset).
pub const ORACLE_GROUND_BOUND: usize = 12;
/// Vertex cap for the a-number recursion over induced subgraphs.
pub const GRAPH_GROUND_BOUND: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PipelineError {
    #[error("building set is not connected")]
    NotConnected,
    #[error("building set is not chordal")]
    NotChordal,
    #[error("ground set with {0} elements exceeds this pipeline's bound {1}")]
    GroundTooLarge(usize, usize),
    #[error("intermediate value overflows 64 bits")]
    Overflow,
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

impl From<PermEngineError> for PipelineError {
    fn from(e: PermEngineError) -> PipelineError {
        match e {
            PermEngineError::NotConnected => PipelineError::NotConnected,
            PermEngineError::NotChordal => PipelineError::NotChordal,
        }
    }
}

/// Which engine produced a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Alternating,
    Homology,
    ANumbers,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::Alternating => "alternating",
            Method::Homology => "homology",
            Method::ANumbers => "a-numbers",
        })
    }
}

/// One nonzero contribution: `subset` adds `count` to the Betti number in
/// degree `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BreakdownRow {
    pub subset: ElementSet,
    pub k: usize,
    pub count: u64,
}

/// Betti numbers with their per-subset contributions and wall-clock cost.
#[derive(Debug, Clone)]
pub struct BettiReport {
    pub method: Method,
    /// `betti[k]` is the Betti number in degree `k`.
    pub betti: Vec<u64>,
    /// Nonzero contributions in ascending subset order; they sum to `betti`.
    pub breakdown: Vec<BreakdownRow>,
    pub elapsed: Duration,
}

impl BettiReport {
    /// The Betti number in degree `k`; zero beyond the stored range.
    pub fn betti_at(&self, k: usize) -> u64 {
        self.betti.get(k).copied().unwrap_or(0)
    }

    fn assemble(
        method: Method,
        min_len: usize,
        rows: Vec<BreakdownRow>,
        started: Instant,
    ) -> Result<BettiReport, PipelineError> {
        let mut betti = vec![0u64; min_len];
        for row in &rows {
            if row.k >= betti.len() {
                betti.resize(row.k + 1, 0);
            }
            betti[row.k] = betti[row.k]
                .checked_add(row.count)
                .ok_or(PipelineError::Overflow)?;
        }
        Ok(BettiReport {
            method,
            betti,
            breakdown: rows,
            elapsed: started.elapsed(),
        })
    }
}

/// All even-cardinality subsets of `ground`, ascending as bitmasks.
fn even_subsets(ground: ElementSet) -> Vec<ElementSet> {
    ground.subsets().filter(|s| s.len() % 2 == 0).collect()
}

/// The number of alternating B|_I-permutations, with a cheap parity
/// prefilter: a restriction with an odd-order component admits none.
fn alternating_count_within(b: &BuildingSet, subset: ElementSet) -> u64 {
    if subset.is_empty() {
        return 1;
    }
    if b.components_within(subset)
        .iter()
        .any(|c| c.len() % 2 == 1)
    {
        return 0;
    }
    count_alternating_b_permutations(&b.restrict(subset))
}

fn keep_nonzero(rows: Vec<BreakdownRow>) -> Vec<BreakdownRow> {
    rows.into_iter().filter(|r| r.count > 0).collect()
}

/// Betti numbers of the real toric manifold by counting alternating
/// B|_I-permutations over all even subsets I of the ground set. The degree-k
/// number collects the subsets of cardinality 2k; the empty subset
/// contributes the empty permutation, so the degree-0 number is 1.
///
/// Requires a connected chordal building set — for anything else the counts
/// have no Betti-number meaning (see `compare_methods`).
pub fn real_betti_alternating(b: &BuildingSet) -> Result<BettiReport, PipelineError> {
    let started = Instant::now();
    if !b.is_connected() {
        return Err(PipelineError::NotConnected);
    }
    if !b.is_chordal() {
        return Err(PipelineError::NotChordal);
    }
    let n = b.ground().len();
    if n > ALTERNATING_GROUND_BOUND {
        return Err(PipelineError::GroundTooLarge(n, ALTERNATING_GROUND_BOUND));
    }
    let rows: Vec<BreakdownRow> = even_subsets(b.ground())
        .into_par_iter()
        .map(|subset| BreakdownRow {
            subset,
            k: subset.len() / 2,
            count: alternating_count_within(b, subset),
        })
        .collect();
    BettiReport::assemble(Method::Alternating, n / 2 + 1, keep_nonzero(rows), started)
}

/// Betti numbers through reduced simplicial homology: every even subset I
/// contributes its parity subcomplex's reduced Betti number of degree d to
/// the manifold Betti number of degree d + 1, plus the degree-0 convention
/// for the empty subset. Only connectivity is required, which makes this the
/// reference oracle for non-chordal inputs.
pub fn real_betti_homology_oracle(b: &BuildingSet) -> Result<BettiReport, PipelineError> {
    let started = Instant::now();
    if !b.is_connected() {
        return Err(PipelineError::NotConnected);
    }
    let n = b.ground().len();
    if n > ORACLE_GROUND_BOUND {
        return Err(PipelineError::GroundTooLarge(n, ORACLE_GROUND_BOUND));
    }
    let per_subset: Result<Vec<Vec<BreakdownRow>>, PipelineError> = even_subsets(b.ground())
        .into_par_iter()
        .map(|subset| {
            if subset.is_empty() {
                return Ok(vec![BreakdownRow {
                    subset,
                    k: 0,
                    count: 1,
                }]);
            }
            let sub = induced_parity_subcomplex(b, subset)?;
            let rb = reduced_betti(&sub);
            Ok(rb
                .nonzero()
                .into_iter()
                .map(|(d, rank)| BreakdownRow {
                    subset,
                    k: (d + 1) as usize,
                    count: rank,
                })
                .collect())
        })
        .collect();
    let rows: Vec<BreakdownRow> = per_subset?.into_iter().flatten().collect();
    BettiReport::assemble(Method::Homology, n / 2 + 1, rows, started)
}

/// Betti numbers of the complex toric manifold: the descent histogram of the
/// B-permutations placed in even degrees, with zeros in between. Entry 2d of
/// the result counts the B-permutations with exactly d descents.
pub fn complex_betti(b: &BuildingSet) -> Result<Vec<u64>, PipelineError> {
    let n = b.ground().len();
    if n > ALTERNATING_GROUND_BOUND {
        return Err(PipelineError::GroundTooLarge(n, ALTERNATING_GROUND_BOUND));
    }
    let hist = descent_histogram_of_b_permutations(b)?;
    let mut out = vec![0u64; 2 * hist.len() - 1];
    for (d, &v) in hist.iter().enumerate() {
        out[2 * d] = v;
    }
    Ok(out)
}

/// Connected components of the induced subgraph on `vs`.
fn induced_components(g: &SimpleGraph, vs: ElementSet) -> Vec<ElementSet> {
    let mut remaining = vs;
    let mut out = Vec::new();
    while let Some(start) = remaining.min_label() {
        let mut comp = ElementSet::singleton(start);
        let mut frontier = vec![start];
        while let Some(v) = frontier.pop() {
            for u in (g.neighbors(v) & remaining).iter() {
                if !comp.contains(u) {
                    comp = comp.with(u);
                    frontier.push(u);
                }
            }
        }
        remaining = remaining - comp;
        out.push(comp);
    }
    out
}

fn sa_on(
    g: &SimpleGraph,
    vs: ElementSet,
    memo: &mut HashMap<u64, i64>,
) -> Result<i64, PipelineError> {
    if vs.is_empty() {
        return Ok(1);
    }
    if let Some(&v) = memo.get(&vs.bits()) {
        return Ok(v);
    }
    let comps = induced_components(g, vs);
    let value = if comps.len() > 1 {
        let mut prod: i64 = 1;
        for c in comps {
            prod = prod
                .checked_mul(sa_on(g, c, memo)?)
                .ok_or(PipelineError::Overflow)?;
        }
        prod
    } else if vs.len() % 2 == 1 {
        0
    } else {
        let mut sum: i64 = 0;
        for sub in vs.subsets() {
            if sub == vs {
                continue;
            }
            sum = sum
                .checked_add(sa_on(g, sub, memo)?)
                .ok_or(PipelineError::Overflow)?;
        }
        sum.checked_neg().ok_or(PipelineError::Overflow)?
    };
    memo.insert(vs.bits(), value);
    Ok(value)
}

/// The signed graph invariant sa: 1 on the empty graph, 0 for connected
/// graphs of odd order, minus the sum of sa over all proper induced
/// subgraphs for connected graphs of even order, and multiplicative over
/// connected components.
pub fn sa_number(g: &SimpleGraph) -> Result<i64, PipelineError> {
    let n = g.vertices().len();
    if n > GRAPH_GROUND_BOUND {
        return Err(PipelineError::GroundTooLarge(n, GRAPH_GROUND_BOUND));
    }
    sa_on(g, g.vertices(), &mut HashMap::new())
}

/// The a-number of a graph, the absolute value of `sa_number`.
pub fn a_number(g: &SimpleGraph) -> Result<u64, PipelineError> {
    Ok(sa_number(g)?.unsigned_abs())
}

/// Betti numbers of the real toric manifold of the graphical building set,
/// summing a-numbers of induced subgraphs over even vertex subsets. No
/// chordality (or even connectivity) assumption: the a-number recursion is
/// completely general, which makes this an independent check on both other
/// engines.
pub fn real_betti_graph(g: &SimpleGraph) -> Result<BettiReport, PipelineError> {
    let started = Instant::now();
    let n = g.vertices().len();
    if n > GRAPH_GROUND_BOUND {
        return Err(PipelineError::GroundTooLarge(n, GRAPH_GROUND_BOUND));
    }
    let mut memo = HashMap::new();
    let mut rows = Vec::new();
    for subset in even_subsets(g.vertices()) {
        let count = sa_on(g, subset, &mut memo)?.unsigned_abs();
        if count > 0 {
            rows.push(BreakdownRow {
                subset,
                k: subset.len() / 2,
                count,
            });
        }
    }
    BettiReport::assemble(Method::ANumbers, n / 2 + 1, rows, started)
}

fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)?;
        acc /= (i + 1) as u128;
    }
    u64::try_from(acc).ok()
}

/// Betti numbers of the real toric manifold of the Hochschild building set
/// B_{m,n} by the closed form: the degree-k number sums, over splits
/// 2k = s + r with s ≤ m and r ≤ n, the number of s-subsets of the clear
/// part times the specialized alternating count for (s, r). Much faster than
/// the generic sweep and exact for every m, n with m + n within the
/// specialized counter's bound.
pub fn hochschild_betti(m: u32, n: u32) -> Result<BettiReport, PipelineError> {
    let started = Instant::now();
    let total = m as usize + n as usize;
    assert!(total >= 1, "the ground set must be nonempty");
    if total > MAX_TOTAL as usize {
        return Err(PipelineError::GroundTooLarge(total, MAX_TOTAL as usize));
    }
    let mut betti = Vec::with_capacity(total / 2 + 1);
    for k in 0..=(total / 2) as u32 {
        let mut beta: u64 = 0;
        for s in 0..=m.min(2 * k) {
            let r = 2 * k - s;
            if r > n {
                continue;
            }
            let ways = binomial(m as u64, s as u64).ok_or(PipelineError::Overflow)?;
            let term = ways
                .checked_mul(count_alt_hoch(s, r))
                .ok_or(PipelineError::Overflow)?;
            beta = beta.checked_add(term).ok_or(PipelineError::Overflow)?;
        }
        betti.push(beta);
    }
    Ok(BettiReport {
        method: Method::Alternating,
        betti,
        breakdown: Vec::new(),
        elapsed: started.elapsed(),
    })
}

/// Whether the Hochschild Betti numbers have stabilized in the shade
/// parameter: compares degrees 0..=k_max across n = m+2, m+3, m+4.
pub fn hochschild_stability_check(m: u32, k_max: usize) -> Result<bool, PipelineError> {
    let base = hochschild_betti(m, m + 2)?;
    for n in [m + 3, m + 4] {
        let other = hochschild_betti(m, n)?;
        for k in 0..=k_max {
            if base.betti_at(k) != other.betti_at(k) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// One subset-degree cell of a two-method comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComparisonRow {
    pub subset: ElementSet,
    pub k: usize,
    pub alternating: u64,
    pub homology: u64,
}

/// Side-by-side per-subset output of the two engines.
#[derive(Debug, Clone)]
pub struct ComparisonReport {
    pub chordal: bool,
    pub alternating: BettiReport,
    pub homology: BettiReport,
    /// Every (subset, degree) cell where either engine is nonzero, ascending
    /// by subset then degree.
    pub rows: Vec<ComparisonRow>,
    pub agree: bool,
}

impl ComparisonReport {
    /// The rows where the two engines differ.
    pub fn mismatches(&self) -> Vec<ComparisonRow> {
        self.rows
            .iter()
            .copied()
            .filter(|r| r.alternating != r.homology)
            .collect()
    }
}

/// Runs the alternating count and the homology oracle side by side and
/// reports per-subset agreement. The alternating counts are computed without
/// the chordality gate — on non-chordal input they are exactly the numbers
/// whose failure to be Betti numbers the report exhibits, so mismatches are
/// data here, not errors.
pub fn compare_methods(b: &BuildingSet) -> Result<ComparisonReport, PipelineError> {
    if !b.is_connected() {
        return Err(PipelineError::NotConnected);
    }
    let n = b.ground().len();
    if n > ORACLE_GROUND_BOUND {
        return Err(PipelineError::GroundTooLarge(n, ORACLE_GROUND_BOUND));
    }
    let started = Instant::now();
    let alt_rows: Vec<BreakdownRow> = even_subsets(b.ground())
        .into_par_iter()
        .map(|subset| BreakdownRow {
            subset,
            k: subset.len() / 2,
            count: alternating_count_within(b, subset),
        })
        .collect();
    let alternating = BettiReport::assemble(
        Method::Alternating,
        n / 2 + 1,
        keep_nonzero(alt_rows),
        started,
    )?;
    let homology = real_betti_homology_oracle(b)?;

    let mut merged: BTreeMap<(u64, usize), (u64, u64)> = BTreeMap::new();
    for r in &alternating.breakdown {
        merged.entry((r.subset.bits(), r.k)).or_default().0 = r.count;
    }
    for r in &homology.breakdown {
        merged.entry((r.subset.bits(), r.k)).or_default().1 = r.count;
    }
    let rows: Vec<ComparisonRow> = merged
        .into_iter()
        .map(|((bits, k), (a, h))| ComparisonRow {
            subset: ElementSet::from_bits(bits),
            k,
            alternating: a,
            homology: h,
        })
        .collect();
    let agree =
        alternating.betti == homology.betti && rows.iter().all(|r| r.alternating == r.homology);
    let chordal = b.is_chordal();
    debug_assert!(!chordal || agree, "methods disagree on a chordal input");
    Ok(ComparisonReport {
        chordal,
        alternating,
        homology,
        rows,
        agree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graphical(g: &SimpleGraph) -> BuildingSet {
        BuildingSet::graphical(g).unwrap()
    }

    fn labels(v: &[u32]) -> ElementSet {
        ElementSet::from_labels(v.iter().copied())
    }

    /// The 5-cycle visited in the vertex order 1, 5, 4, 2, 3.
    fn relabeled_five_cycle() -> SimpleGraph {
        let mut g = SimpleGraph::new(ElementSet::initial(5));
        for (u, v) in [(1, 5), (5, 4), (4, 2), (2, 3), (3, 1)] {
            g.add_edge(u, v).unwrap();
        }
        g
    }

    #[test]
    fn path_six_by_both_engines() {
        let b = graphical(&SimpleGraph::path(6));
        let alt = real_betti_alternating(&b).unwrap();
        let hom = real_betti_homology_oracle(&b).unwrap();
        assert_eq!(alt.betti, vec![1, 5, 9, 5]);
        assert_eq!(hom.betti, vec![1, 5, 9, 5]);
        let row = |s: &[u32]| {
            alt.breakdown
                .iter()
                .find(|r| r.subset == labels(s))
                .map(|r| r.count)
                .unwrap_or(0)
        };
        assert_eq!(row(&[1, 2, 3, 4]), 2);
        assert_eq!(row(&[1, 2, 4, 5]), 1);
        assert_eq!(row(&[]), 1);
        // Contributions really do sum to the totals.
        for report in [&alt, &hom] {
            let mut sums = vec![0u64; report.betti.len()];
            for r in &report.breakdown {
                sums[r.k] += r.count;
            }
            assert_eq!(sums, report.betti);
        }
    }

    #[test]
    fn path_five_odd_ground() {
        let b = graphical(&SimpleGraph::path(5));
        let alt = real_betti_alternating(&b).unwrap();
        let hom = real_betti_homology_oracle(&b).unwrap();
        assert_eq!(alt.betti, vec![1, 4, 5]);
        assert_eq!(hom.betti, vec![1, 4, 5]);
    }

    #[test]
    fn maximal_ground_four() {
        let b = BuildingSet::maximal(ElementSet::initial(4)).unwrap();
        assert_eq!(real_betti_alternating(&b).unwrap().betti, vec![1, 6, 5]);
        assert_eq!(real_betti_homology_oracle(&b).unwrap().betti, vec![1, 6, 5]);
    }

    #[test]
    fn smallest_connected_case() {
        let b = graphical(&SimpleGraph::path(2));
        assert_eq!(real_betti_alternating(&b).unwrap().betti, vec![1, 1]);
        assert_eq!(real_betti_homology_oracle(&b).unwrap().betti, vec![1, 1]);
        assert_eq!(real_betti_graph(&SimpleGraph::path(2)).unwrap().betti, vec![1, 1]);
    }

    #[test]
    fn hochschild_two_four_three_routes() {
        let closed = hochschild_betti(2, 4).unwrap();
        assert_eq!(closed.betti, vec![1, 4, 5, 2]);
        let b = BuildingSet::hochschild(2, 4).unwrap();
        assert_eq!(real_betti_alternating(&b).unwrap().betti, vec![1, 4, 5, 2]);
        assert_eq!(real_betti_homology_oracle(&b).unwrap().betti, vec![1, 4, 5, 2]);
    }

    #[test]
    fn hochschild_shade_cutoff() {
        // With only two shaded elements no split may use r > 2: the closed
        // form must not pick up the r = 4 term that exists for larger shades.
        let closed = hochschild_betti(2, 2).unwrap();
        assert_eq!(closed.betti, vec![1, 4, 3]);
        let b = BuildingSet::hochschild(2, 2).unwrap();
        assert_eq!(real_betti_alternating(&b).unwrap().betti, vec![1, 4, 3]);
    }

    #[test]
    fn hochschild_stability() {
        assert!(hochschild_stability_check(0, 4).unwrap());
        assert!(hochschild_stability_check(2, 6).unwrap());
        assert!(hochschild_stability_check(3, 6).unwrap());
        assert_eq!(hochschild_betti(3, 5).unwrap().betti, vec![1, 7, 17, 17, 6]);
        assert_eq!(hochschild_betti(0, 2).unwrap().betti, vec![1, 1]);
        assert_eq!(hochschild_betti(0, 5).unwrap().betti, vec![1, 1, 0]);
    }

    #[test]
    fn sa_and_a_values() {
        assert_eq!(sa_number(&SimpleGraph::path(2)).unwrap(), -1);
        assert_eq!(a_number(&SimpleGraph::path(2)).unwrap(), 1);
        assert_eq!(sa_number(&SimpleGraph::path(4)).unwrap(), 2);
        assert_eq!(a_number(&SimpleGraph::path(4)).unwrap(), 2);
        assert_eq!(a_number(&SimpleGraph::cycle(4)).unwrap(), 3);
        assert_eq!(a_number(&SimpleGraph::complete(4)).unwrap(), 5);
        // Odd order kills a connected graph; any odd component kills a product.
        assert_eq!(a_number(&SimpleGraph::path(3)).unwrap(), 0);
        assert_eq!(a_number(&SimpleGraph::new(labels(&[1, 2]))).unwrap(), 0);
        assert_eq!(a_number(&SimpleGraph::new(ElementSet::EMPTY)).unwrap(), 1);
    }

    #[test]
    fn graph_route_matches_known_families() {
        assert_eq!(
            real_betti_graph(&SimpleGraph::path(6)).unwrap().betti,
            vec![1, 5, 9, 5]
        );
        assert_eq!(
            real_betti_graph(&SimpleGraph::complete(4)).unwrap().betti,
            vec![1, 6, 5]
        );
        let star = SimpleGraph::star(4);
        assert_eq!(real_betti_graph(&star).unwrap().betti, vec![1, 3, 2]);
        assert_eq!(
            real_betti_alternating(&graphical(&star)).unwrap().betti,
            vec![1, 3, 2]
        );
    }

    #[test]
    fn chordal_methods_agree() {
        for b in [
            graphical(&SimpleGraph::path(4)),
            BuildingSet::maximal(ElementSet::initial(4)).unwrap(),
            BuildingSet::hochschild(2, 3).unwrap(),
        ] {
            let report = compare_methods(&b).unwrap();
            assert!(report.chordal);
            assert!(report.agree, "disagreement on {b:?}");
            assert!(report.mismatches().is_empty());
        }
        let path4 = compare_methods(&graphical(&SimpleGraph::path(4))).unwrap();
        assert_eq!(path4.alternating.betti, vec![1, 3, 2]);
    }

    #[test]
    fn cyclic_five_cycle_agrees_despite_nonchordality() {
        // Every 4-subset of the cyclically labeled 5-cycle happens to give
        // the same count (2) from both engines, so the comparison agrees
        // even though the input is not chordal.
        let g = SimpleGraph::cycle(5);
        let b = graphical(&g);
        assert!(matches!(
            real_betti_alternating(&b),
            Err(PipelineError::NotChordal)
        ));
        let report = compare_methods(&b).unwrap();
        assert!(!report.chordal);
        assert!(report.agree);
        assert_eq!(report.homology.betti, vec![1, 5, 10]);
        assert_eq!(report.alternating.betti, vec![1, 5, 10]);
        let cell = report
            .rows
            .iter()
            .find(|r| r.subset == labels(&[1, 2, 3, 5]))
            .copied()
            .unwrap();
        assert_eq!((cell.alternating, cell.homology), (2, 2));
        assert_eq!(real_betti_graph(&g).unwrap().betti, vec![1, 5, 10]);
    }

    #[test]
    fn relabeled_five_cycle_exhibits_mismatch() {
        // Walking the 5-cycle in the order 1, 5, 4, 2, 3 puts three
        // alternating B|_I-permutations on I = {1,2,3,5} while the parity
        // subcomplex only has rank 2 there, so the engines must split.
        let g = relabeled_five_cycle();
        let report = compare_methods(&graphical(&g)).unwrap();
        assert!(!report.chordal);
        assert!(!report.agree);
        let cell = report
            .rows
            .iter()
            .find(|r| r.subset == labels(&[1, 2, 3, 5]))
            .copied()
            .unwrap();
        assert_eq!(cell.k, 2);
        assert_eq!((cell.alternating, cell.homology), (3, 2));
        let mismatches = report.mismatches();
        assert!(mismatches.contains(&cell));
        assert_eq!(report.homology.betti, vec![1, 5, 10]);
        // The graph route always matches the oracle, labeling or no.
        assert_eq!(real_betti_graph(&g).unwrap().betti, vec![1, 5, 10]);
    }

    #[test]
    fn complex_betti_values() {
        let max4 = BuildingSet::maximal(ElementSet::initial(4)).unwrap();
        assert_eq!(
            complex_betti(&max4).unwrap(),
            vec![1, 0, 11, 0, 11, 0, 1]
        );
        let path4 = graphical(&SimpleGraph::path(4));
        assert_eq!(
            complex_betti(&path4).unwrap(),
            vec![1, 0, 6, 0, 6, 0, 1]
        );
        let max2 = BuildingSet::maximal(ElementSet::initial(2)).unwrap();
        assert_eq!(complex_betti(&max2).unwrap(), vec![1, 0, 1]);
        for b in [&max4, &path4] {
            let out = complex_betti(b).unwrap();
            let reversed: Vec<u64> = out.iter().rev().copied().collect();
            assert_eq!(out, reversed, "complex Betti numbers must be palindromic");
        }
    }

    #[test]
    fn gates_and_bounds() {
        let disconnected =
            BuildingSet::new(labels(&[1, 2]), [labels(&[1]), labels(&[2])]).unwrap();
        assert!(matches!(
            real_betti_alternating(&disconnected),
            Err(PipelineError::NotConnected)
        ));
        assert!(matches!(
            real_betti_homology_oracle(&disconnected),
            Err(PipelineError::NotConnected)
        ));
        assert!(matches!(
            compare_methods(&disconnected),
            Err(PipelineError::NotConnected)
        ));
        assert_eq!(
            complex_betti(&graphical(&SimpleGraph::cycle(5))),
            Err(PipelineError::NotChordal)
        );

        // Interval members form a connected chordal building set on any
        // ground, here sized past the alternating sweep's cap.
        let mut intervals = Vec::new();
        for lo in 1..=17u32 {
            for hi in lo..=17 {
                intervals.push(ElementSet::interval(lo, hi));
            }
        }
        let wide = BuildingSet::new(ElementSet::initial(17), intervals).unwrap();
        assert!(matches!(
            real_betti_alternating(&wide),
            Err(PipelineError::GroundTooLarge(17, ALTERNATING_GROUND_BOUND))
        ));

        let thirteen = BuildingSet::maximal(ElementSet::initial(13)).unwrap();
        assert!(matches!(
            real_betti_homology_oracle(&thirteen),
            Err(PipelineError::GroundTooLarge(13, ORACLE_GROUND_BOUND))
        ));
        assert!(matches!(
            real_betti_graph(&SimpleGraph::path(13)),
            Err(PipelineError::GroundTooLarge(13, GRAPH_GROUND_BOUND))
        ));
    }

    #[test]
    fn binomial_is_exact() {
        assert_eq!(binomial(0, 0), Some(1));
        assert_eq!(binomial(6, 2), Some(15));
        assert_eq!(binomial(6, 7), Some(0));
        assert_eq!(binomial(52, 26), Some(495_918_532_948_104));
    }
}
