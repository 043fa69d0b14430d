//! Totients, divisors, `lcm(1..n)`, cyclotomic polynomials and the products
//! `ν_n = ∏ (z^j - 1)` and `π_n = ∏ γ_j` used by the torsion test.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{Degree, IntPoly};

fn require_positive(n: u64, op: &'static str) -> Result<()> {
    if n == 0 {
        Err(Error::ZeroArgument { op })
    } else {
        Ok(())
    }
}

/// Prime factorization by trial division, as `(prime, exponent)` pairs in
/// increasing order of the prime.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            let mut v = 0;
            while n.is_multiple_of(p) {
                n /= p;
                v += 1;
            }
            out.push((p, v));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Euler's totient from the factorization: `φ(p^v) = p^(v-1)(p-1)` on each
/// prime power, multiplied together.
pub fn totient(n: u64) -> Result<u64> {
    require_positive(n, "totient")?;
    Ok(factorize(n)
        .into_iter()
        .map(|(p, v)| p.pow(v - 1) * (p - 1))
        .product())
}

/// All positive divisors of `m`, increasing.
pub fn divisors(m: u64) -> Result<Vec<u64>> {
    require_positive(m, "divisors")?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut k = 1u64;
    while k.saturating_mul(k) <= m {
        if m.is_multiple_of(k) {
            small.push(k);
            if k != m / k {
                large.push(m / k);
            }
        }
        k += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// `ℓ(n) = lcm(1, 2, …, n)`.
pub fn lcm_upto(n: u64) -> Result<BigUint> {
    require_positive(n, "lcm_upto")?;
    Ok((1..=n).fold(BigUint::one(), |acc, k| acc.lcm(&BigUint::from(k))))
}

/// Totients of `1..=limit`, filled by a linear sieve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotientTable {
    limit: u64,
    // index 0 unused
    values: Vec<u64>,
}

impl TotientTable {
    pub fn sieve(limit: u64) -> Result<Self> {
        require_positive(limit, "TotientTable::sieve")?;
        let len = limit as usize + 1;
        let mut phi = vec![0u64; len];
        let mut primes: Vec<usize> = Vec::new();
        phi[1] = 1;
        for i in 2..len {
            if phi[i] == 0 {
                phi[i] = i as u64 - 1;
                primes.push(i);
            }
            for &p in &primes {
                let ip = i * p;
                if ip >= len {
                    break;
                }
                if i % p == 0 {
                    phi[ip] = phi[i] * p as u64;
                    break;
                }
                phi[ip] = phi[i] * (p as u64 - 1);
            }
        }
        Ok(Self { limit, values: phi })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// `φ(n)` for `1 ≤ n ≤ limit`.
    pub fn get(&self, n: u64) -> Option<u64> {
        (1..=self.limit)
            .contains(&n)
            .then(|| self.values[n as usize])
    }

    /// `(n, φ(n))` for `n = 1..=limit`.
    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.values
            .iter()
            .copied()
            .enumerate()
            .skip(1)
            .map(|(n, p)| (n as u64, p))
    }
}

/// Memo of cyclotomic polynomials keyed by index.
///
/// Lookups take `&mut self`, so a cache is confined to one thread at a
/// time. Parallel callers each hold their own cache (or clone a warm one).
#[derive(Clone, Debug, Default)]
pub struct CyclotomicCache {
    polys: HashMap<u64, IntPoly>,
}

impl CyclotomicCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn cached(&self, n: u64) -> Option<&IntPoly> {
        self.polys.get(&n)
    }

    /// `γ_n = (z^n - 1) / ∏_{d | n, d < n} γ_d`.
    ///
    /// # Panics
    ///
    /// If the defining division is inexact or the result is not monic of
    /// degree `φ(n)`. Either means the arithmetic is broken.
    pub fn get(&mut self, n: u64) -> Result<&IntPoly> {
        require_positive(n, "cyclotomic")?;
        if !self.polys.contains_key(&n) {
            let poly = self.compute(n)?;
            self.polys.insert(n, poly);
        }
        Ok(&self.polys[&n])
    }

    fn compute(&mut self, n: u64) -> Result<IntPoly> {
        let mut product = IntPoly::one();
        for d in divisors(n)? {
            if d < n {
                product = &product * self.get(d)?;
            }
        }
        let numerator = IntPoly::z_pow_minus_one(n as usize);
        let gamma = numerator.div_exact(&product)?.unwrap_or_else(|| {
            panic!("internal consistency fault: z^{n} - 1 not divisible by lower cyclotomics")
        });
        let phi = totient(n)?;
        assert!(
            gamma.is_monic() && gamma.degree() == Degree::Finite(phi as usize),
            "internal consistency fault: gamma_{n} is not monic of degree {phi}"
        );
        Ok(gamma)
    }

    /// `π_n = γ_1 γ_2 ⋯ γ_n`.
    pub fn pi_product(&mut self, n: u64) -> Result<IntPoly> {
        require_positive(n, "pi_poly_product")?;
        let mut acc = IntPoly::one();
        for j in 1..=n {
            acc = &acc * self.get(j)?;
        }
        Ok(acc)
    }
}

/// `γ_n` with a throwaway cache.
pub fn cyclotomic(n: u64) -> Result<IntPoly> {
    CyclotomicCache::new().get(n).cloned()
}

/// `ν_n = ∏_{j=1}^{n} (z^j - 1)`, of degree `n(n+1)/2`.
pub fn nu_poly(n: u64) -> Result<IntPoly> {
    require_positive(n, "nu_poly")?;
    Ok((1..=n as usize).fold(IntPoly::one(), |acc, j| acc.mul_z_pow_minus_one(j)))
}

/// `π_n` as the squarefree part `ν_n / gcd(ν_n, ν_n')`.
pub fn pi_poly_gcd(n: u64) -> Result<IntPoly> {
    let nu = nu_poly(n)?;
    let g = nu.gcd(&nu.derivative())?;
    let pi = nu.div_exact(&g)?.unwrap_or_else(|| {
        panic!("internal consistency fault: gcd(nu_{n}, nu_{n}') does not divide nu_{n}")
    });
    // nu_n is monic, so the primitive gcd is ±monic and so is the quotient
    Ok(if pi.leading().is_some_and(|l| l.is_one()) {
        pi
    } else {
        -pi
    })
}

/// `π_n` as the product of the first `n` cyclotomic polynomials.
pub fn pi_poly_product(n: u64) -> Result<IntPoly> {
    CyclotomicCache::new().pi_product(n)
}

/// Least `n` such that `φ(m) > d` for every `m > n`.
///
/// Since `φ(m) ≥ √(m/2)`, every `m > 2d²` already has `φ(m) > d`, so only
/// `m ≤ 2d²` is scanned and the result never exceeds `2d²`.
pub fn torsion_bound(d: u64) -> Result<u64> {
    require_positive(d, "torsion_bound")?;
    let table = TotientTable::sieve(faithful_bound(d))?;
    Ok(table
        .iter()
        .filter(|&(_, phi)| phi <= d)
        .map(|(m, _)| m)
        .max()
        .expect("phi(1) = 1 <= d"))
}

/// The closed-form bound `2d²`.
pub fn faithful_bound(d: u64) -> u64 {
    2 * d * d
}

pub const MAX_PERIOD_LIMIT: u64 = 24;

/// Largest period reachable with cyclotomic budget `d`, and the index set
/// achieving it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxPeriod {
    pub period: BigUint,
    pub witness: BTreeSet<u64>,
}

/// Maximum of `lcm(J)` over index sets `J` with `Σ_{j∈J} φ(j) ≤ d`.
///
/// This is the longest eventual period of a `d × d` rational torsion
/// matrix. The witness is the set with the smallest totient sum among the
/// maximizers, ties broken towards the lexicographically greatest set when
/// each set is listed in decreasing order.
pub fn max_torsion_period(d: u64) -> Result<MaxPeriod> {
    require_positive(d, "max_torsion_period")?;
    if d > MAX_PERIOD_LIMIT {
        return Err(Error::GuardExceeded {
            op: "max_torsion_period",
            value: d,
            limit: MAX_PERIOD_LIMIT,
        });
    }
    let table = TotientTable::sieve(faithful_bound(d))?;
    let mut candidates: Vec<(u64, u64)> = table.iter().filter(|&(_, phi)| phi <= d).collect();
    candidates.reverse();

    let mut search = PeriodSearch {
        candidates: &candidates,
        best_lcm: 1,
        best_cost: 0,
        best_set: Vec::new(),
        current: Vec::new(),
    };
    search.descend(0, d, 1, 0);
    Ok(MaxPeriod {
        period: BigUint::from(search.best_lcm),
        witness: search.best_set.into_iter().collect(),
    })
}

struct PeriodSearch<'a> {
    // (index, totient), indices decreasing
    candidates: &'a [(u64, u64)],
    best_lcm: u64,
    best_cost: u64,
    best_set: Vec<u64>,
    current: Vec<u64>,
}

impl PeriodSearch<'_> {
    // Include-first over decreasing indices visits sets in decreasing
    // lexicographic order, so the first maximizer of a given cost wins ties.
    fn descend(&mut self, start: usize, budget: u64, lcm: u64, cost: u64) {
        if lcm > self.best_lcm || (lcm == self.best_lcm && cost < self.best_cost) {
            self.best_lcm = lcm;
            self.best_cost = cost;
            self.best_set = self.current.clone();
        }
        for i in start..self.candidates.len() {
            let (j, phi) = self.candidates[i];
            // an index dividing the running lcm only spends budget
            if phi > budget || lcm.is_multiple_of(j) {
                continue;
            }
            self.current.push(j);
            self.descend(i + 1, budget - phi, lcm.lcm(&j), cost + phi);
            self.current.pop();
        }
    }
}
