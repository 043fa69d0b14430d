//! Labeled matrices shared by the integration suites. Every label comes
//! from how the matrix was built, never from the decider under test.

#![allow(dead_code)]

use matrix_torsion::numtheory::CyclotomicCache;
use matrix_torsion::rational::{from_int, ratio};
use matrix_torsion::{RatMatrix, RatPoly, Rational};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expected {
    Torsion { preperiod: usize, period: u64 },
    NonTorsion,
}

#[derive(Clone, Debug)]
pub struct Labeled {
    pub name: String,
    pub m: RatMatrix,
    pub expected: Expected,
}

impl Labeled {
    pub fn is_torsion(&self) -> bool {
        matches!(self.expected, Expected::Torsion { .. })
    }
}

/// Indices with small totient used for block constructions.
pub const SMALL_INDICES: [u64; 9] = [1, 2, 3, 4, 5, 6, 8, 10, 12];

pub fn small_phi(j: u64) -> usize {
    (1..=j).filter(|k| k.gcd(&j) == 1).count()
}

pub fn shift_block(k: usize) -> RatMatrix {
    RatMatrix::companion(&RatPoly::monomial(from_int(1), k)).unwrap()
}

pub fn gamma_block(cache: &mut CyclotomicCache, j: u64) -> RatMatrix {
    RatMatrix::companion(&cache.get(j).unwrap().to_rat()).unwrap()
}

/// `diag(shift(k), C(γ_j) for j in blocks)`; `blocks` may repeat indices.
pub fn construction(cache: &mut CyclotomicCache, k: usize, blocks: &[u64]) -> RatMatrix {
    let mut parts = Vec::new();
    if k > 0 {
        parts.push(shift_block(k));
    }
    for &j in blocks {
        parts.push(gamma_block(cache, j));
    }
    RatMatrix::block_diag(&parts).unwrap()
}

pub fn lcm_all(xs: impl IntoIterator<Item = u64>) -> u64 {
    xs.into_iter().fold(1, |a, x| a.lcm(&x))
}

pub fn permutation_matrix(perm: &[usize]) -> RatMatrix {
    let n = perm.len();
    let mut rows = vec![vec![Rational::zero(); n]; n];
    for (i, &p) in perm.iter().enumerate() {
        rows[p][i] = from_int(1);
    }
    RatMatrix::from_rows(rows).unwrap()
}

pub fn cycle_lcm(perm: &[usize]) -> u64 {
    let mut seen = vec![false; perm.len()];
    let mut l = 1u64;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        l = l.lcm(&len);
    }
    l
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

pub fn random_int_matrix(rng: &mut ChaCha8Rng, d: usize, lo: i64, hi: i64) -> RatMatrix {
    let rows: Vec<Vec<i64>> = (0..d)
        .map(|_| (0..d).map(|_| rng.gen_range(lo..=hi)).collect())
        .collect();
    RatMatrix::from_i64_rows(&rows)
}

/// Determinant by Gaussian elimination over Q.
pub fn determinant(m: &RatMatrix) -> Rational {
    let n = m.order();
    let mut a: Vec<Vec<Rational>> = m.rows().map(|r| r.to_vec()).collect();
    let mut det = from_int(1);
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        let (top, rest) = a.split_at_mut(c + 1);
        let pivot = &top[c];
        for row in rest {
            let f = &row[c] / &pivot[c];
            for (x, p) in row[c..].iter_mut().zip(&pivot[c..]) {
                *x -= &f * p;
            }
        }
    }
    det
}

/// Random invertible matrix with small entries, occasionally fractional.
pub fn random_invertible(rng: &mut ChaCha8Rng, d: usize) -> (RatMatrix, RatMatrix) {
    loop {
        let mut rows: Vec<Vec<Rational>> = (0..d)
            .map(|_| (0..d).map(|_| from_int(rng.gen_range(-2i64..=2))).collect())
            .collect();
        if rng.gen_bool(0.3) {
            let r = rng.gen_range(0..d);
            for x in rows[r].iter_mut() {
                *x = &*x * ratio(1, 2);
            }
        }
        let s = RatMatrix::from_rows(rows).unwrap();
        if let Some(inv) = s.inverse() {
            return (s, inv);
        }
    }
}

pub fn conjugate(m: &RatMatrix, s: &RatMatrix, s_inv: &RatMatrix) -> RatMatrix {
    &(s * m) * s_inv
}

fn torsion(name: String, m: RatMatrix, preperiod: usize, period: u64) -> Labeled {
    Labeled {
        name,
        m,
        expected: Expected::Torsion { preperiod, period },
    }
}

fn non_torsion(name: String, m: RatMatrix) -> Labeled {
    Labeled {
        name,
        m,
        expected: Expected::NonTorsion,
    }
}

fn subsets(items: &[u64]) -> Vec<Vec<u64>> {
    (0u32..1 << items.len())
        .map(|mask| {
            items
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &j)| j)
                .collect()
        })
        .collect()
}

/// Torsion matrices of known preperiod and period.
pub fn torsion_corpus(seed: u64) -> Vec<Labeled> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cache = CyclotomicCache::new();
    let mut out = Vec::new();

    // z^k ∏ γ_j, every combination of degree ≤ 5
    for js in subsets(&SMALL_INDICES) {
        let cost: usize = js.iter().map(|&j| small_phi(j)).sum();
        for k in 0..=3usize {
            if k + cost > 5 || (k == 0 && js.is_empty()) {
                continue;
            }
            let m = construction(&mut cache, k, &js);
            out.push(torsion(
                format!("block k={k} J={js:?}"),
                m,
                k,
                lcm_all(js.iter().copied()),
            ));
        }
    }

    // repeated blocks leave the minimal polynomial unchanged
    for (k, js, extra) in [
        (0usize, vec![3u64], vec![3u64]),
        (1, vec![4], vec![4]),
        (0, vec![1, 2], vec![2, 1, 1]),
        (2, vec![6], vec![6]),
        (0, vec![5], vec![2]),
    ] {
        let mut blocks = js.clone();
        blocks.extend(&extra);
        let m = construction(&mut cache, k, &blocks);
        let all: Vec<u64> = blocks.clone();
        out.push(torsion(
            format!("repeated k={k} blocks={blocks:?}"),
            m,
            k,
            lcm_all(all),
        ));
    }

    // permutation matrices
    for n in 1..=4 {
        for p in permutations(n) {
            let l = cycle_lcm(&p);
            out.push(torsion(format!("perm {p:?}"), permutation_matrix(&p), 0, l));
        }
    }
    for _ in 0..6 {
        let n = rng.gen_range(5..=6);
        let mut p: Vec<usize> = (0..n).collect();
        p.shuffle(&mut rng);
        let l = cycle_lcm(&p);
        out.push(torsion(format!("perm {p:?}"), permutation_matrix(&p), 0, l));
    }

    // similarity conjugates of a sample of the above
    let base: Vec<Labeled> = out.iter().step_by(4).cloned().collect();
    for item in base {
        let (s, s_inv) = random_invertible(&mut rng, item.m.order());
        let m = conjugate(&item.m, &s, &s_inv);
        out.push(Labeled {
            name: format!("conj({})", item.name),
            m,
            expected: item.expected,
        });
    }
    out
}

/// Matrices with an eigenvalue off the roots of unity or a nontrivial
/// Jordan block at one, hence never torsion.
pub fn non_torsion_corpus(seed: u64) -> Vec<Labeled> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cache = CyclotomicCache::new();
    let mut out = Vec::new();

    // |det| ≥ 2 forces an eigenvalue of modulus > 1
    while out.len() < 24 {
        let d = rng.gen_range(1..=5);
        let m = random_int_matrix(&mut rng, d, -3, 3);
        if determinant(&m).abs() >= from_int(2) {
            out.push(non_torsion(
                format!("random det>=2 d={d} #{}", out.len()),
                m,
            ));
        }
    }

    // unipotent and negated-unipotent Jordan blocks
    for a in [-3i64, -2, -1, 1, 2, 3, 17] {
        out.push(non_torsion(
            format!("[[1,{a}],[0,1]]"),
            RatMatrix::from_i64_rows(&[[1, a], [0, 1]]),
        ));
        out.push(non_torsion(
            format!("[[-1,{a}],[0,-1]]"),
            RatMatrix::from_i64_rows(&[[-1, a], [0, -1]]),
        ));
    }
    out.push(non_torsion(
        "J3(1)".into(),
        RatMatrix::from_i64_rows(&[[1, 1, 0], [0, 1, 1], [0, 0, 1]]),
    ));

    // squared cyclotomics: roots of unity, but not diagonalizable
    for j in [1u64, 2, 3, 4, 6] {
        let g = cache.get(j).unwrap().to_rat();
        let m = RatMatrix::companion(&(&g * &g)).unwrap();
        out.push(non_torsion(format!("C(gamma_{j}^2)"), m));
    }
    // a torsion block next to a Jordan block is still not torsion
    let jordan = RatMatrix::from_i64_rows(&[[1, 1], [0, 1]]);
    let m = RatMatrix::block_diag(&[gamma_block(&mut cache, 3), jordan]).unwrap();
    out.push(non_torsion("C(gamma_3) + J2(1)".into(), m));

    // modulus-one eigenvalues (3 ± 4i)/5 that are not roots of unity
    let pyth = RatMatrix::from_rows(vec![
        vec![ratio(3, 5), ratio(-4, 5)],
        vec![ratio(4, 5), ratio(3, 5)],
    ])
    .unwrap();
    out.push(non_torsion("rotation (3+4i)/5".into(), pyth.clone()));
    out.push(non_torsion(
        "rotation (3+4i)/5 + C(gamma_4)".into(),
        RatMatrix::block_diag(&[pyth, gamma_block(&mut cache, 4)]).unwrap(),
    ));
    // contracting eigenvalue
    out.push(non_torsion(
        "diag(1/2, 1)".into(),
        RatMatrix::diagonal(vec![ratio(1, 2), from_int(1)]),
    ));
    out.push(non_torsion(
        "diag(-2/3, 0, 1)".into(),
        RatMatrix::diagonal(vec![ratio(-2, 3), from_int(0), from_int(1)]),
    ));

    let base: Vec<Labeled> = out.iter().step_by(3).cloned().collect();
    for item in base {
        let (s, s_inv) = random_invertible(&mut rng, item.m.order());
        out.push(non_torsion(
            format!("conj({})", item.name),
            conjugate(&item.m, &s, &s_inv),
        ));
    }
    out
}

pub fn full_corpus() -> Vec<Labeled> {
    let mut all = torsion_corpus(0x7075);
    all.extend(non_torsion_corpus(0x4e54));
    all
}
