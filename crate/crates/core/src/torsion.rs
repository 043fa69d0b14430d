//! Deciding whether a rational matrix is torsion.
//!
//! Three independent routes are provided:
//!
//! * [`torsion_certificate`] factors the minimal polynomial as
//!   `z^k · ∏_{j∈J} γ_j` (the default decision path);
//! * [`decide_torsion_annihilation`] checks that `M` annihilates
//!   `z^d · π_n` for the index bound `n`;
//! * [`oracle_cycle_detect`] looks for two equal powers directly, up to a cap.
//!
//! [`check_power_equivalence`] tests `M^(n!+d) = M^d` for tiny orders, and
//! [`verify_certificate`] re-checks a certificate without trusting the code
//! that produced it.
//!
//! Preperiod convention: powers range over `M, M², …`. The reported
//! preperiod is `k`, the multiplicity of `0` as a root of `μ`, and the
//! certificate promises `M^(k+T) = M^k` where `T` is the period (for `k = 0`
//! this reads `M^T = I`). The first repeated pair of powers is then
//! `(max(k, 1), max(k, 1) + T)`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::numtheory::{self, CyclotomicCache};
use crate::par::{self, Schedule};
use crate::poly::{Degree, IntPoly, RatPoly};

/// Which index `n` to use in `z^d · π_n`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum BoundMode {
    /// The least valid index, [`numtheory::torsion_bound`].
    #[default]
    Tight,
    /// The closed form `n = 2d²`.
    Faithful,
}

impl BoundMode {
    pub fn index(self, d: u64) -> u64 {
        match self {
            BoundMode::Tight => numtheory::torsion_bound(d).expect("d >= 1"),
            BoundMode::Faithful => numtheory::faithful_bound(d),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BoundMode::Tight => "tight",
            BoundMode::Faithful => "faithful",
        }
    }
}

/// Outcome of the minimal-polynomial decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionCertificate {
    pub torsion: bool,
    /// Order of the matrix.
    pub d: usize,
    /// Multiplicity of the root `0` in `mu`.
    pub k: usize,
    /// Cyclotomic indices `J` with `mu = z^k ∏_{j∈J} γ_j`; `None` unless torsion.
    pub cyclotomic: Option<BTreeSet<u64>>,
    pub preperiod: Option<usize>,
    /// `lcm(J)`, with `lcm(∅) = 1`.
    pub period: Option<BigUint>,
    /// Monic minimal polynomial of the matrix.
    pub mu: RatPoly,
}

/// `z^d · π_n` with `n` chosen by `mode`.
pub fn annihilating_polynomial(d: usize, mode: BoundMode) -> IntPoly {
    let n = mode.index(d as u64);
    numtheory::pi_poly_product(n).expect("n >= 1").shift(d)
}

/// Whether `M` annihilates `z^d · π_n`.
pub fn decide_torsion_annihilation(m: &RatMatrix, mode: BoundMode) -> bool {
    let p = annihilating_polynomial(m.order(), mode).to_rat();
    m.eval_poly(&p).is_zero()
}

/// Annihilation test over a batch; the test polynomial is built once per
/// distinct order.
pub fn annihilation_batch(ms: &[RatMatrix], mode: BoundMode, schedule: Schedule) -> Vec<bool> {
    let mut polys: HashMap<usize, RatPoly> = HashMap::new();
    for m in ms {
        polys
            .entry(m.order())
            .or_insert_with(|| annihilating_polynomial(m.order(), mode).to_rat());
    }
    par::map(ms, schedule, |m| m.eval_poly(&polys[&m.order()]).is_zero())
}

/// Factors the minimal polynomial into `z^k` times distinct cyclotomics.
///
/// After stripping `z^k`, the remainder is trial-divided by `γ_j` for
/// ascending `j ≤ torsion_bound(d)` with `φ(j) ≤ d`. A factor that divides
/// twice, a non-integral remainder, or anything left over means the matrix
/// is not torsion.
pub fn torsion_certificate(m: &RatMatrix) -> TorsionCertificate {
    let d = m.order();
    let mu = m.minimal_polynomial();
    let k = mu
        .coeffs()
        .iter()
        .take_while(|c| num_traits::Zero::is_zero(*c))
        .count();
    let non_torsion = |mu: RatPoly| TorsionCertificate {
        torsion: false,
        d,
        k,
        cyclotomic: None,
        preperiod: None,
        period: None,
        mu,
    };

    let Some(mut rest) = RatPoly::new(mu.coeffs()[k..].to_vec()).to_int() else {
        return non_torsion(mu);
    };
    let bound = numtheory::torsion_bound(d as u64).expect("d >= 1");
    let mut cache = CyclotomicCache::new();
    let mut indices = BTreeSet::new();
    for j in 1..=bound {
        if rest.degree() == Degree::Finite(0) {
            break;
        }
        if numtheory::totient(j).expect("j >= 1") > d as u64 {
            continue;
        }
        let gamma = cache.get(j).expect("j >= 1");
        if gamma.degree() > rest.degree() {
            continue;
        }
        if let Some(q) = rest.div_exact(gamma).expect("gamma is nonzero") {
            if q.div_exact(gamma).expect("gamma is nonzero").is_some() {
                return non_torsion(mu);
            }
            rest = q;
            indices.insert(j);
        }
    }
    if !rest.is_one() {
        return non_torsion(mu);
    }
    let period = lcm_of(&indices);
    TorsionCertificate {
        torsion: true,
        d,
        k,
        cyclotomic: Some(indices),
        preperiod: Some(k),
        period: Some(period),
        mu,
    }
}

/// Certificates for a batch of matrices, in input order.
pub fn certificate_batch(ms: &[RatMatrix], schedule: Schedule) -> Vec<TorsionCertificate> {
    par::map(ms, schedule, torsion_certificate)
}

fn lcm_of(indices: &BTreeSet<u64>) -> BigUint {
    indices
        .iter()
        .fold(BigUint::one(), |acc, &j| acc.lcm(&BigUint::from(j)))
}

/// Why [`verify_certificate`] refused a certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rejection {
    NotTorsionClaim,
    OrderMismatch,
    MissingField,
    BadIndex,
    DegreeExceedsOrder,
    MuMismatch,
    MuDoesNotAnnihilate,
    PreperiodMismatch,
    PeriodMismatch,
    PowerIdentityFails,
}

impl Rejection {
    /// Stable reason code used in CLI documents.
    pub fn code(self) -> &'static str {
        match self {
            Rejection::NotTorsionClaim => "not a torsion claim",
            Rejection::OrderMismatch => "order mismatch",
            Rejection::MissingField => "missing field",
            Rejection::BadIndex => "bad cyclotomic index",
            Rejection::DegreeExceedsOrder => "degree exceeds order",
            Rejection::MuMismatch => "mu mismatch",
            Rejection::MuDoesNotAnnihilate => "mu does not annihilate",
            Rejection::PreperiodMismatch => "preperiod mismatch",
            Rejection::PeriodMismatch => "period mismatch",
            Rejection::PowerIdentityFails => "power identity fails",
        }
    }
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// Independent check of a torsion claim.
///
/// Rebuilds `z^k ∏_{j∈J} γ_j` and compares it with `mu`, checks
/// `mu(M) = 0` by Horner evaluation, bounds the degree by `d`, checks the
/// preperiod and period fields against `k` and `J`, and finally checks
/// `M^(preperiod+period) = M^preperiod` by binary powering.
pub fn verify_certificate(m: &RatMatrix, c: &TorsionCertificate) -> Result<(), Rejection> {
    if !c.torsion {
        return Err(Rejection::NotTorsionClaim);
    }
    if c.d != m.order() {
        return Err(Rejection::OrderMismatch);
    }
    let (Some(indices), Some(preperiod), Some(period)) = (&c.cyclotomic, c.preperiod, &c.period)
    else {
        return Err(Rejection::MissingField);
    };
    if indices.contains(&0) {
        return Err(Rejection::BadIndex);
    }
    let d = c.d as u64;
    let mut degree = c.k as u64;
    for &j in indices {
        degree += numtheory::totient(j).map_err(|_| Rejection::BadIndex)?;
        if degree > d {
            return Err(Rejection::DegreeExceedsOrder);
        }
    }

    let mut cache = CyclotomicCache::new();
    let mut rebuilt = IntPoly::one().shift(c.k);
    for &j in indices {
        rebuilt = &rebuilt * cache.get(j).map_err(|_| Rejection::BadIndex)?;
    }
    if rebuilt.to_rat() != c.mu {
        return Err(Rejection::MuMismatch);
    }
    if !m.eval_poly(&c.mu).is_zero() {
        return Err(Rejection::MuDoesNotAnnihilate);
    }
    if preperiod != c.k {
        return Err(Rejection::PreperiodMismatch);
    }
    if *period != lcm_of(indices) {
        return Err(Rejection::PeriodMismatch);
    }
    let base = m.pow(&BigUint::from(preperiod));
    if m.pow(&(BigUint::from(preperiod) + period)) != base {
        return Err(Rejection::PowerIdentityFails);
    }
    Ok(())
}

/// First pair `p < q ≤ cap` with `M^p = M^q`, scanning `M, M², …, M^cap`.
///
/// `None` only means no repetition within the cap; it proves nothing.
pub fn oracle_cycle_detect(m: &RatMatrix, cap: u64) -> Option<(u64, u64)> {
    let mut seen: HashMap<String, u64> = HashMap::new();
    let mut power = m.clone();
    for e in 1..=cap {
        let key = power.canonical_key();
        if let Some(&p) = seen.get(&key) {
            return Some((p, e));
        }
        seen.insert(key, e);
        if e < cap {
            power = &power * m;
        }
    }
    None
}

/// Largest order accepted by [`check_power_equivalence`].
pub const POWER_EQUIVALENCE_LIMIT: usize = 3;

/// Whether `M^(n!+d) = M^d` with `n = torsion_bound(d)`.
pub fn check_power_equivalence(m: &RatMatrix) -> Result<bool> {
    let d = m.order();
    if d > POWER_EQUIVALENCE_LIMIT {
        return Err(Error::GuardExceeded {
            op: "check_power_equivalence",
            value: d as u64,
            limit: POWER_EQUIVALENCE_LIMIT as u64,
        });
    }
    let n = numtheory::torsion_bound(d as u64)?;
    Ok(power_identity_holds(m, &factorial(n)))
}

/// Largest order accepted by [`check_mandel_simon`].
pub const MANDEL_SIMON_LIMIT: usize = 2;

/// Whether `M^((2d²)!+d) = M^d`, the factorial identity every torsion matrix
/// satisfies.
pub fn check_mandel_simon(m: &RatMatrix) -> Result<bool> {
    let d = m.order();
    if d > MANDEL_SIMON_LIMIT {
        return Err(Error::GuardExceeded {
            op: "check_mandel_simon",
            value: d as u64,
            limit: MANDEL_SIMON_LIMIT as u64,
        });
    }
    Ok(power_identity_holds(
        m,
        &factorial(numtheory::faithful_bound(d as u64)),
    ))
}

// M^(t+d) == M^d
fn power_identity_holds(m: &RatMatrix, t: &BigUint) -> bool {
    let d = BigUint::from(m.order());
    m.pow(&(t + &d)) == m.pow(&d)
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}
