//! Exact square rational matrices.

use std::fmt;
use std::ops::Mul;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{integer_content, Degree, RatPoly};
use crate::rational::{self, Rational};

/// A `d × d` matrix of canonical rationals, `d ≥ 1`, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    order: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn new(order: usize, entries: Vec<Rational>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidMatrix("order must be at least 1".into()));
        }
        if entries.len() != order * order {
            return Err(Error::InvalidMatrix(format!(
                "{} entries for order {order}",
                entries.len()
            )));
        }
        Ok(Self { order, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return Err(Error::InvalidMatrix("rows do not form a square".into()));
        }
        Self::new(order, rows.into_iter().flatten().collect())
    }

    /// Integer matrix from rows; panics unless square and nonempty.
    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| rational::from_int(x)).collect())
            .collect();
        Self::from_rows(rows).expect("square integer matrix")
    }

    pub fn identity(order: usize) -> Self {
        Self::scalar(order, Rational::one())
    }

    pub fn zero(order: usize) -> Self {
        assert!(order >= 1, "matrix order must be at least 1");
        Self {
            order,
            entries: vec![Rational::zero(); order * order],
        }
    }

    pub fn scalar(order: usize, c: Rational) -> Self {
        let mut m = Self::zero(order);
        for i in 0..order {
            m.entries[i * order + i] = c.clone();
        }
        m
    }

    pub fn diagonal(values: Vec<Rational>) -> Self {
        let mut m = Self::zero(values.len());
        for (i, v) in values.into_iter().enumerate() {
            m.entries[i * m.order + i] = v;
        }
        m
    }

    /// Companion matrix of a monic polynomial of degree `n ≥ 1`: ones on the
    /// subdiagonal, `-c_0, …, -c_{n-1}` down the last column. Its minimal and
    /// characteristic polynomials are both `p`.
    pub fn companion(p: &RatPoly) -> Result<Self> {
        let n = match p.degree() {
            Degree::Finite(n) if n >= 1 && p.is_monic() => n,
            _ => {
                return Err(Error::InvalidMatrix(
                    "companion matrix needs a monic polynomial of degree >= 1".into(),
                ))
            }
        };
        let mut m = Self::zero(n);
        for i in 1..n {
            m.entries[i * n + i - 1] = Rational::one();
        }
        for (i, c) in p.coeffs()[..n].iter().enumerate() {
            m.entries[i * n + n - 1] = -c;
        }
        Ok(m)
    }

    /// Block-diagonal matrix with the given blocks in order.
    pub fn block_diag(blocks: &[RatMatrix]) -> Result<Self> {
        let order: usize = blocks.iter().map(|b| b.order).sum();
        if order == 0 {
            return Err(Error::InvalidMatrix("no blocks".into()));
        }
        let mut m = Self::zero(order);
        let mut offset = 0;
        for b in blocks {
            for i in 0..b.order {
                for j in 0..b.order {
                    m.entries[(offset + i) * order + offset + j] = b.get(i, j).clone();
                }
            }
            offset += b.order;
        }
        Ok(m)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row * self.order + col]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.entries.chunks(self.order)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self == &Self::identity(self.order)
    }

    /// Largest bit length of any numerator or denominator.
    pub fn max_entry_bits(&self) -> u64 {
        self.entries
            .iter()
            .map(rational::bit_len)
            .max()
            .unwrap_or(0)
    }

    pub fn checked_add(&self, other: &RatMatrix) -> Result<RatMatrix> {
        self.check_order(other)?;
        Ok(Self {
            order: self.order,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn scale(&self, c: &Rational) -> RatMatrix {
        Self {
            order: self.order,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    fn add_scalar_in_place(&mut self, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for i in 0..self.order {
            self.entries[i * self.order + i] += c;
        }
    }

    fn check_order(&self, other: &RatMatrix) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    /// `(N, D)` with `self = N / D`, `D` the lcm of the entry denominators.
    fn integer_form(&self) -> (Vec<BigInt>, BigInt) {
        let denom = rational::lcm_of_denominators(&self.entries);
        let ints = self
            .entries
            .iter()
            .map(|r| r.numer() * (&denom / r.denom()))
            .collect();
        (ints, denom)
    }

    /// Exact product; fails when the orders differ.
    pub fn checked_mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        self.check_order(other)?;
        Ok(self.product(other))
    }

    // Both operands are brought to a common denominator so the inner loop
    // runs over integers; each entry is reduced once at the end.
    fn product(&self, other: &RatMatrix) -> RatMatrix {
        let n = self.order;
        let (a, da) = self.integer_form();
        let (b, db) = other.integer_form();
        let denom = da * db;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = BigInt::zero();
                for k in 0..n {
                    let x = &a[i * n + k];
                    let y = &b[k * n + j];
                    if !x.is_zero() && !y.is_zero() {
                        acc += x * y;
                    }
                }
                entries.push(if denom.is_one() {
                    Rational::from_integer(acc)
                } else {
                    Rational::new(acc, denom.clone())
                });
            }
        }
        RatMatrix { order: n, entries }
    }

    /// `self^e` by binary powering. `self^0` is the identity.
    pub fn pow(&self, e: &BigUint) -> RatMatrix {
        let mut result = Self::identity(self.order);
        let bits = e.bits();
        for i in (0..bits).rev() {
            result = result.product(&result);
            if e.bit(i) {
                result = result.product(self);
            }
        }
        result
    }

    pub fn pow_u64(&self, e: u64) -> RatMatrix {
        self.pow(&BigUint::from(e))
    }

    /// `p(self)` by Horner's scheme: `deg p` multiplications by `self`, each
    /// followed by adding a scalar multiple of the identity.
    pub fn eval_poly(&self, p: &RatPoly) -> RatMatrix {
        let coeffs = p.coeffs();
        let Some((lead, rest)) = coeffs.split_last() else {
            return Self::zero(self.order);
        };
        let mut acc = Self::scalar(self.order, lead.clone());
        for c in rest.iter().rev() {
            acc = acc.product(self);
            acc.add_scalar_in_place(c);
        }
        acc
    }

    /// Inverse by Gauss–Jordan elimination, `None` when singular.
    pub fn inverse(&self) -> Option<RatMatrix> {
        let n = self.order;
        let mut a: Vec<Vec<Rational>> = self.rows().map(<[_]>::to_vec).collect();
        let mut inv: Vec<Vec<Rational>> = Self::identity(n).rows().map(<[_]>::to_vec).collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let scale = a[col][col].recip();
            for x in a[col].iter_mut().chain(inv[col].iter_mut()) {
                *x *= &scale;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for c in 0..n {
                    let t = &f * &a[col][c];
                    a[r][c] -= t;
                    let t = &f * &inv[col][c];
                    inv[r][c] -= t;
                }
            }
        }
        Some(Self::from_rows(inv).expect("square"))
    }

    /// Monic minimal polynomial: the first linear dependence among
    /// `I, M, M², …` viewed as vectors of length `d²`.
    ///
    /// Each power is scaled to an integer vector and reduced against the
    /// earlier ones by fraction-free elimination, carrying the combination
    /// coefficients along; the first vector that reduces to zero yields the
    /// relation.
    ///
    /// # Panics
    ///
    /// If no dependence turns up by degree `d`, which Cayley–Hamilton rules
    /// out.
    pub fn minimal_polynomial(&self) -> RatPoly {
        let d = self.order;
        let mut echelon = Echelon::default();
        let mut power = Self::identity(d);
        for k in 0..=d {
            let (ints, scale) = power.integer_form();
            if let Some(relation) = echelon.insert(ints, k) {
                // Σ relation_i · scale_i · M^i = 0
                let coeffs: Vec<Rational> = relation
                    .iter()
                    .zip(&echelon.scales)
                    .chain(std::iter::once((&relation[k], &scale)))
                    .take(k + 1)
                    .map(|(c, s)| Rational::from_integer(c * s))
                    .collect();
                let mu = RatPoly::new(coeffs).monic();
                debug_assert_eq!(mu.degree(), Degree::Finite(k));
                return mu;
            }
            echelon.scales.push(scale);
            power = power.product(self);
        }
        panic!("internal consistency fault: no linear dependence among I..M^{d}");
    }

    /// Row-major `p/q` tokens joined by commas, one string per matrix.
    pub fn canonical_key(&self) -> String {
        let mut key = String::new();
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                key.push(',');
            }
            key.push_str(&e.numer().to_string());
            key.push('/');
            key.push_str(&e.denom().to_string());
        }
        key
    }
}

#[derive(Default)]
struct Echelon {
    // (vector, pivot column, combination over powers 0..=k)
    rows: Vec<(Vec<BigInt>, usize, Vec<BigInt>)>,
    // integer scale of each inserted power
    scales: Vec<BigInt>,
}

impl Echelon {
    /// Reduces power `k` against the stored rows. Returns the combination
    /// `c` with `Σ c_i w_i = 0` if it reduces to zero, else stores it.
    fn insert(&mut self, mut v: Vec<BigInt>, k: usize) -> Option<Vec<BigInt>> {
        let mut comb = vec![BigInt::zero(); k + 1];
        comb[k] = BigInt::one();
        for (row, pivot, row_comb) in &self.rows {
            let f = &v[*pivot];
            if f.is_zero() {
                continue;
            }
            let p = &row[*pivot];
            let g = f.gcd(p);
            let (fm, pm) = (f / &g, p / &g);
            for (x, y) in v.iter_mut().zip(row) {
                *x = &*x * &pm - y * &fm;
            }
            for (i, x) in comb.iter_mut().enumerate() {
                let y = row_comb.get(i).cloned().unwrap_or_default();
                *x = &*x * &pm - y * &fm;
            }
            reduce_content(&mut v, &mut comb);
        }
        match v.iter().position(|x| !x.is_zero()) {
            None => Some(comb),
            Some(pivot) => {
                self.rows.push((v, pivot, comb));
                None
            }
        }
    }
}

fn reduce_content(v: &mut [BigInt], comb: &mut [BigInt]) {
    let all: Vec<BigInt> = v.iter().chain(comb.iter()).cloned().collect();
    let g = integer_content(&all);
    if g > BigInt::one() {
        for x in v.iter_mut().chain(comb.iter_mut()) {
            *x /= &g;
        }
    }
}

impl Mul for &RatMatrix {
    type Output = RatMatrix;

    /// # Panics
    ///
    /// On an order mismatch; use [`RatMatrix::checked_mul`] to get an error.
    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        self.checked_mul(rhs).expect("matrix orders must match")
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(rational::format_rational).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}
