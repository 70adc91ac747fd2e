//! Reduced rational homology of simplicial complexes via boundary-matrix
//! ranks.
//!
//! Ranks are computed modulo two independently chosen random 62-bit primes;
//! a rank modulo a prime never exceeds the rational rank, and the two draws
//! agree on every matrix that does not have both primes dividing the same
//! determinantal divisor. When the draws disagree the computation falls back
//! to exact fraction-free elimination (machine integers first, arbitrary
//! precision if those overflow). `reduced_betti_exact` forces the exact path.

use crate::complex::SimplicialComplex;
use num_bigint::{BigInt, Sign};

/// Reduced Betti numbers of a complex, indexed from degree -1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedBetti {
    void: bool,
    /// `values[i]` is the reduced Betti number in degree `i - 1`.
    values: Vec<u64>,
}

impl ReducedBetti {
    /// All-zero homology of the void complex.
    pub fn of_void() -> ReducedBetti {
        ReducedBetti {
            void: true,
            values: Vec::new(),
        }
    }

    pub fn is_void(&self) -> bool {
        self.void
    }

    /// The reduced Betti number in degree `d` (`d = -1` is meaningful for
    /// the empty complex); zero outside the stored range.
    pub fn betti(&self, d: isize) -> u64 {
        if d < -1 {
            return 0;
        }
        self.values.get((d + 1) as usize).copied().unwrap_or(0)
    }

    /// The nonzero entries as `(degree, rank)` pairs.
    pub fn nonzero(&self) -> Vec<(isize, u64)> {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(i, &v)| (i as isize - 1, v))
            .collect()
    }

    /// Whether every nonzero entry sits in degree `d`.
    pub fn concentrated_in(&self, d: isize) -> bool {
        self.nonzero().iter().all(|&(deg, _)| deg == d)
    }

    pub fn total_rank(&self) -> u64 {
        self.values.iter().sum()
    }

    /// Alternating sum over all degrees including -1; equals the reduced
    /// Euler characteristic of the complex.
    pub fn reduced_euler(&self) -> i64 {
        -self
            .values
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let signed = v as i64;
                if i % 2 == 0 {
                    signed
                } else {
                    -signed
                }
            })
            .sum::<i64>()
    }
}

/// Sparse integer matrix in column-major form; entries are +1 or -1.
struct Boundary {
    rows: usize,
    cols: Vec<Vec<(u32, i8)>>,
}

/// Boundary operators of `k`, augmented: index `d` maps d-faces to
/// (d-1)-faces, with the single empty face as the codomain of index 0.
fn boundary_matrices(k: &SimplicialComplex) -> Vec<Boundary> {
    use std::collections::HashMap;
    let top = match k.dim() {
        None | Some(-1) => return Vec::new(),
        Some(t) => t as usize,
    };
    let mut out = Vec::with_capacity(top + 1);
    out.push(Boundary {
        rows: 1,
        cols: vec![vec![(0, 1)]; k.faces_of_dim(0).len()],
    });
    for d in 1..=top {
        let below: HashMap<&[u32], u32> = k
            .faces_of_dim(d - 1)
            .iter()
            .enumerate()
            .map(|(i, f)| (f.as_slice(), i as u32))
            .collect();
        let cols = k
            .faces_of_dim(d)
            .iter()
            .map(|face| {
                face.iter()
                    .enumerate()
                    .map(|(t, _)| {
                        let mut sub = face.clone();
                        sub.remove(t);
                        let sign = if t % 2 == 0 { 1 } else { -1 };
                        (below[sub.as_slice()], sign)
                    })
                    .collect()
            })
            .collect();
        out.push(Boundary {
            rows: k.faces_of_dim(d - 1).len(),
            cols,
        });
    }
    out
}

fn betti_from_ranks(k: &SimplicialComplex, ranks: &[usize]) -> ReducedBetti {
    let f: Vec<usize> = k.f_vector();
    let rank = |d: usize| ranks.get(d).copied().unwrap_or(0);
    let mut values = vec![1u64.saturating_sub(rank(0) as u64)];
    for d in 0..f.len() {
        values.push((f[d] - rank(d) - rank(d + 1)) as u64);
    }
    ReducedBetti {
        void: false,
        values,
    }
}

/// Reduced rational Betti numbers, modular fast path with exact fallback.
pub fn reduced_betti(k: &SimplicialComplex) -> ReducedBetti {
    if k.is_void() {
        return ReducedBetti::of_void();
    }
    let boundaries = boundary_matrices(k);
    let ranks: Vec<usize> = boundaries.iter().map(rank_of).collect();
    betti_from_ranks(k, &ranks)
}

/// Reduced rational Betti numbers by exact fraction-free elimination only.
pub fn reduced_betti_exact(k: &SimplicialComplex) -> ReducedBetti {
    if k.is_void() {
        return ReducedBetti::of_void();
    }
    let boundaries = boundary_matrices(k);
    let ranks: Vec<usize> = boundaries.iter().map(rank_exact).collect();
    betti_from_ranks(k, &ranks)
}

fn rank_of(m: &Boundary) -> usize {
    if m.rows == 0 || m.cols.is_empty() {
        return 0;
    }
    let seed = splitmix_seed(m);
    let p1 = random_prime(seed);
    let p2 = random_prime(seed ^ 0x9e37_79b9_7f4a_7c15);
    debug_assert_ne!(p1, p2);
    let r1 = rank_mod_p(m, p1);
    let r2 = rank_mod_p(m, p2);
    if r1 == r2 {
        r1
    } else {
        rank_exact(m)
    }
}

fn splitmix_seed(m: &Boundary) -> u64 {
    let nonzeros: usize = m.cols.iter().map(Vec::len).sum();
    0x6c62_272e_07bb_0142 ^ ((m.rows as u64) << 32) ^ (m.cols.len() as u64) ^ ((nonzeros as u64) << 17)
}

fn splitmix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// A random prime in `[2^61, 2^62)`.
fn random_prime(seed: u64) -> u64 {
    let mut state = seed;
    loop {
        let candidate = (splitmix(&mut state) | 1 | 1 << 61) & ((1 << 62) - 1);
        if is_prime_u64(candidate) {
            return candidate;
        }
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 * b as u128 % p as u128) as u64
}

fn powmod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, valid for all 64-bit integers.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == small {
            return true;
        }
        if n % small == 0 {
            return false;
        }
    }
    let trailing = (n - 1).trailing_zeros();
    let odd = (n - 1) >> trailing;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, odd, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..trailing {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Rank over GF(p) by dense row elimination.
fn rank_mod_p(m: &Boundary, p: u64) -> usize {
    let mut dense: Vec<Vec<u64>> = vec![vec![0; m.cols.len()]; m.rows];
    for (j, col) in m.cols.iter().enumerate() {
        for &(i, sign) in col {
            dense[i as usize][j] = if sign > 0 { 1 } else { p - 1 };
        }
    }
    let mut rank = 0;
    for col in 0..m.cols.len() {
        let Some(pivot) = (rank..dense.len()).find(|&r| dense[r][col] != 0) else {
            continue;
        };
        dense.swap(rank, pivot);
        let inv = powmod(dense[rank][col], p - 2, p);
        for j in col..m.cols.len() {
            dense[rank][j] = mulmod(dense[rank][j], inv, p);
        }
        let (pivot_row, rest) = {
            let (a, b) = dense.split_at_mut(rank + 1);
            (&a[rank], b)
        };
        for row in rest.iter_mut() {
            let factor = row[col];
            if factor == 0 {
                continue;
            }
            for j in col..m.cols.len() {
                let sub = mulmod(factor, pivot_row[j], p);
                row[j] = (row[j] + p - sub) % p;
            }
        }
        rank += 1;
        if rank == dense.len() {
            break;
        }
    }
    rank
}

/// Exact rank: fraction-free Bareiss elimination in i128, restarted with
/// arbitrary-precision integers if any intermediate product overflows.
fn rank_exact(m: &Boundary) -> usize {
    if m.rows == 0 || m.cols.is_empty() {
        return 0;
    }
    let mut dense: Vec<Vec<i128>> = vec![vec![0; m.cols.len()]; m.rows];
    for (j, col) in m.cols.iter().enumerate() {
        for &(i, sign) in col {
            dense[i as usize][j] = sign as i128;
        }
    }
    match rank_bareiss_i128(dense) {
        Some(rank) => rank,
        None => {
            let mut big: Vec<Vec<BigInt>> = (0..m.rows)
                .map(|_| (0..m.cols.len()).map(|_| BigInt::from(0)).collect())
                .collect();
            for (j, col) in m.cols.iter().enumerate() {
                for &(i, sign) in col {
                    big[i as usize][j] = BigInt::from(sign);
                }
            }
            rank_bareiss_big(big)
        }
    }
}

fn rank_bareiss_i128(mut m: Vec<Vec<i128>>) -> Option<usize> {
    let rows = m.len();
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev: i128 = 1;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let lhs = m[rank][col].checked_mul(m[r][c])?;
                let rhs = m[r][col].checked_mul(m[rank][c])?;
                m[r][c] = lhs.checked_sub(rhs)? / prev;
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        rank += 1;
        if rank == rows {
            break;
        }
    }
    Some(rank)
}

fn rank_bareiss_big(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| m[r][col].sign() != Sign::NoSign) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                m[r][c] = (&m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c]) / &prev;
            }
            m[r][col] = BigInt::from(0);
        }
        prev = m[rank][col].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::building::BuildingSet;
    use crate::complex::{
        even_complex, induced_parity_subcomplex, nested_set_complex, odd_complex,
    };
    use crate::set::ElementSet;

    fn set(labels: &[u32]) -> ElementSet {
        ElementSet::from_labels(labels.iter().copied())
    }

    fn example_building_set() -> BuildingSet {
        BuildingSet::new(
            ElementSet::initial(4),
            [
                set(&[1]),
                set(&[2]),
                set(&[3]),
                set(&[4]),
                set(&[1, 4]),
                set(&[3, 4]),
                set(&[1, 3, 4]),
                set(&[2, 3, 4]),
                set(&[1, 2, 3, 4]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn boundary_of_boundary_vanishes() {
        let k = nested_set_complex(&example_building_set()).unwrap();
        let bs = boundary_matrices(&k);
        for pair in bs.windows(2) {
            let (lower, upper) = (&pair[0], &pair[1]);
            for col in &upper.cols {
                let mut acc = vec![0i64; lower.rows];
                for &(face, s1) in col {
                    for &(row, s2) in &lower.cols[face as usize] {
                        acc[row as usize] += (s1 * s2) as i64;
                    }
                }
                assert!(acc.iter().all(|&x| x == 0));
            }
        }
    }

    #[test]
    fn spheres_in_three_flavours() {
        // Two points, a hexagonal circle, and a 2-sphere.
        let pair = SimplicialComplex::from_maximal_faces(vec![set(&[1]), set(&[2])], &[]);
        assert_eq!(reduced_betti(&pair).nonzero(), vec![(0, 1)]);

        let hexagon =
            nested_set_complex(&BuildingSet::maximal(ElementSet::initial(3)).unwrap()).unwrap();
        assert_eq!(reduced_betti(&hexagon).nonzero(), vec![(1, 1)]);

        let sphere = nested_set_complex(&example_building_set()).unwrap();
        assert_eq!(reduced_betti(&sphere).nonzero(), vec![(2, 1)]);
    }

    #[test]
    fn void_and_empty_conventions() {
        let void = reduced_betti(&SimplicialComplex::void());
        assert!(void.is_void());
        assert_eq!(void.total_rank(), 0);
        assert_eq!(void.betti(-1), 0);

        let empty = reduced_betti(&SimplicialComplex::empty());
        assert_eq!(empty.betti(-1), 1);
        assert_eq!(empty.total_rank(), 1);
        assert_eq!(empty.nonzero(), vec![(-1, 1)]);
    }

    #[test]
    fn full_simplex_is_acyclic() {
        let labels: Vec<ElementSet> = (1..=5).map(|i| ElementSet::singleton(i)).collect();
        let k = SimplicialComplex::from_maximal_faces(labels, &[vec![0, 1, 2, 3, 4]]);
        assert_eq!(reduced_betti(&k).total_rank(), 0);
    }

    #[test]
    fn projective_plane_is_rationally_trivial() {
        let labels: Vec<ElementSet> = (1..=6).map(|i| ElementSet::singleton(i)).collect();
        let triangles: Vec<Vec<u32>> = [
            [0, 1, 4],
            [0, 1, 5],
            [0, 2, 3],
            [0, 2, 5],
            [0, 3, 4],
            [1, 2, 3],
            [1, 2, 4],
            [1, 3, 5],
            [2, 4, 5],
            [3, 4, 5],
        ]
        .iter()
        .map(|t| t.to_vec())
        .collect();
        let k = SimplicialComplex::from_maximal_faces(labels, &triangles);
        assert_eq!(k.f_vector(), vec![6, 15, 10]);
        assert_eq!(k.euler_characteristic(), 1);
        // Its integral H_1 is 2-torsion, so every rational rank vanishes.
        assert_eq!(reduced_betti(&k).total_rank(), 0);
        assert_eq!(reduced_betti_exact(&k).total_rank(), 0);
    }

    #[test]
    fn parity_subcomplexes_of_the_permutohedron() {
        let b = BuildingSet::maximal(ElementSet::initial(4)).unwrap();
        let odd = reduced_betti(&odd_complex(&b).unwrap());
        assert_eq!(odd.nonzero(), vec![(1, 5)]);
        let even = reduced_betti(&even_complex(&b).unwrap());
        assert_eq!(even.nonzero(), vec![(0, 5)]);
    }

    #[test]
    fn contractible_parity_subcomplex_of_the_running_example() {
        let b = example_building_set();
        let k = induced_parity_subcomplex(&b, set(&[1, 2])).unwrap();
        assert_eq!(reduced_betti(&k).total_rank(), 0);
        let circle = induced_parity_subcomplex(&b, set(&[1, 2, 3, 4])).unwrap();
        assert_eq!(reduced_betti(&circle).nonzero(), vec![(1, 1)]);
    }

    #[test]
    fn exact_and_modular_ranks_agree() {
        let b = example_building_set();
        let mut complexes = vec![nested_set_complex(&b).unwrap()];
        for mask in ElementSet::initial(4).subsets() {
            complexes.push(induced_parity_subcomplex(&b, mask).unwrap());
        }
        for k in &complexes {
            assert_eq!(reduced_betti(k), reduced_betti_exact(k));
        }
    }

    #[test]
    fn homology_euler_characteristic_matches_face_counts() {
        let b = BuildingSet::maximal(ElementSet::initial(4)).unwrap();
        for mask in ElementSet::initial(4).subsets() {
            let k = induced_parity_subcomplex(&b, mask).unwrap();
            assert_eq!(reduced_betti(&k).reduced_euler(), k.reduced_euler());
        }
    }

    #[test]
    fn prime_sampler_yields_distinct_62_bit_primes() {
        let p = random_prime(12345);
        let q = random_prime(54321);
        assert!(p != q);
        for x in [p, q] {
            assert!(x >> 61 == 1);
            assert!(is_prime_u64(x));
        }
        assert!(!is_prime_u64(1));
        assert!(is_prime_u64(2));
        assert!(!is_prime_u64((1 << 61) + 1));
    }
}
