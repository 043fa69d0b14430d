//! Dense univariate polynomials over `Z` and `Q`.
//!
//! Coefficients are stored little-endian: index `i` holds the coefficient of
//! `z^i`. Both types are kept canonical: the zero polynomial is the empty
//! sequence and the last stored coefficient is otherwise nonzero.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Polynomial degree. The zero polynomial has degree [`Degree::NegInfinity`],
/// which orders below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(n) => Some(n),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(n) => write!(f, "{n}"),
        }
    }
}

fn trim<T: Zero>(coeffs: &mut Vec<T>) {
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
}

fn degree_of<T>(coeffs: &[T]) -> Degree {
    match coeffs.len() {
        0 => Degree::NegInfinity,
        n => Degree::Finite(n - 1),
    }
}

fn add_coeffs<T>(a: &[T], b: &[T]) -> Vec<T>
where
    T: Clone + Zero,
    for<'x> &'x T: Add<&'x T, Output = T>,
{
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o = &*o + s;
    }
    trim(&mut out);
    out
}

fn sub_coeffs<T>(a: &[T], b: &[T]) -> Vec<T>
where
    T: Clone + Zero,
    for<'x> &'x T: Sub<&'x T, Output = T> + Neg<Output = T>,
{
    let mut out: Vec<T> = Vec::with_capacity(a.len().max(b.len()));
    for i in 0..a.len().max(b.len()) {
        out.push(match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x - y,
            (Some(x), None) => x.clone(),
            (None, Some(y)) => -y,
            (None, None) => unreachable!(),
        });
    }
    trim(&mut out);
    out
}

fn mul_coeffs<T>(a: &[T], b: &[T]) -> Vec<T>
where
    T: Clone + Zero,
    for<'x> &'x T: Mul<&'x T, Output = T> + Add<&'x T, Output = T>,
{
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] = &out[i + j] + &(x * y);
            }
        }
    }
    trim(&mut out);
    out
}

// gcd of all coefficients, smallest first; once the running gcd is small
// each step is a cheap remainder instead of a full gcd of two huge numbers
pub(crate) fn integer_content(coeffs: &[BigInt]) -> BigInt {
    let mut sorted: Vec<&BigInt> = coeffs.iter().filter(|c| !c.is_zero()).collect();
    sorted.sort_by_key(|c| c.bits());
    let mut g = BigInt::zero();
    for c in sorted {
        g = if g.is_zero() {
            c.abs()
        } else {
            g.gcd(&(c % &g))
        };
        if g.is_one() {
            break;
        }
    }
    g
}

/// Polynomial with arbitrary-precision integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

/// Polynomial with exact rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

/// Result of [`IntPoly::content_primitive`]: `p = sign · content · primitive`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContentPrimitive {
    /// Positive gcd of the coefficients.
    pub content: BigInt,
    /// Sign of the leading coefficient of the input, `1` or `-1`.
    pub sign: i8,
    /// Coefficient gcd 1, positive leading coefficient.
    pub primitive: IntPoly,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::new(vec![BigInt::one()])
    }

    /// The indeterminate `z`.
    pub fn z() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        trim(&mut coeffs);
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn monomial(c: BigInt, exp: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = c;
        Self { coeffs }
    }

    /// `z^n - 1`.
    pub fn z_pow_minus_one(n: usize) -> Self {
        let mut p = Self::monomial(BigInt::one(), n);
        p = &p - &Self::one();
        p
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn degree(&self) -> Degree {
        degree_of(&self.coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly {
            coeffs: self
                .coeffs
                .iter()
                .cloned()
                .map(Rational::from_integer)
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Multiplies by `z^j - 1` in linear time.
    pub fn mul_z_pow_minus_one(&self, j: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + j];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i + j] += c;
            coeffs[i] -= c;
        }
        Self::new(coeffs)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Splits a nonzero polynomial into sign, positive content and a
    /// primitive part with positive leading coefficient.
    pub fn content_primitive(&self) -> Result<ContentPrimitive> {
        let lead = self.leading().ok_or(Error::ZeroContent)?;
        let sign: i8 = if lead.is_negative() { -1 } else { 1 };
        let content = integer_content(&self.coeffs);
        let divisor = if sign < 0 { -&content } else { content.clone() };
        let primitive = Self {
            coeffs: self.coeffs.iter().map(|c| c / &divisor).collect(),
        };
        Ok(ContentPrimitive {
            content,
            sign,
            primitive,
        })
    }

    /// Primitive part with positive leading coefficient; zero maps to zero.
    pub fn primitive_part(&self) -> Self {
        match self.content_primitive() {
            Ok(cp) => cp.primitive,
            Err(_) => Self::zero(),
        }
    }

    /// Pseudo-remainder of `self` by a nonzero `divisor`: the remainder of
    /// `lc(divisor)^e · self` for some `e ≥ 0`, computed without fractions.
    pub fn pseudo_rem(&self, divisor: &IntPoly) -> Result<IntPoly> {
        let db = match divisor.degree() {
            Degree::NegInfinity => return Err(Error::DivisionByZero),
            Degree::Finite(n) => n,
        };
        let lb = divisor.leading().unwrap();
        let mut r = self.coeffs.clone();
        while r.len() > db {
            let shift = r.len() - 1 - db;
            let lr = r.last().unwrap().clone();
            for c in r.iter_mut() {
                *c *= lb;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                r[shift + j] -= &lr * b;
            }
            debug_assert!(r.last().unwrap().is_zero());
            trim(&mut r);
        }
        Ok(Self { coeffs: r })
    }

    /// Exact quotient `self / divisor` over `Z`, or `None` when the division
    /// leaves a remainder or needs fractions.
    pub fn div_exact(&self, divisor: &IntPoly) -> Result<Option<IntPoly>> {
        let db = match divisor.degree() {
            Degree::NegInfinity => return Err(Error::DivisionByZero),
            Degree::Finite(n) => n,
        };
        if self.is_zero() {
            return Ok(Some(Self::zero()));
        }
        if self.coeffs.len() <= db {
            return Ok(None);
        }
        let lb = divisor.leading().unwrap();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); r.len() - db];
        for i in (0..q.len()).rev() {
            let top = &r[i + db];
            if top.is_zero() {
                continue;
            }
            let (c, rem) = top.div_rem(lb);
            if !rem.is_zero() {
                return Ok(None);
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                r[i + j] -= &c * b;
            }
            q[i] = c;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return Ok(None);
        }
        Ok(Some(Self::new(q)))
    }

    /// Greatest common divisor by a primitive polynomial remainder sequence,
    /// normalized primitive with positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> Result<IntPoly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroGcd);
        }
        let (mut f, mut g) = if self.degree() >= other.degree() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        while !g.is_zero() {
            if g.degree() == Degree::Finite(0) {
                return Ok(Self::one());
            }
            let r = f.pseudo_rem(&g)?.primitive_part();
            f = g;
            g = r;
        }
        Ok(f)
    }

    /// Number of trailing zero coefficients, i.e. the multiplicity of the
    /// root 0. Zero for the zero polynomial.
    pub fn z_valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }
}

impl RatPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::new(vec![Rational::one()])
    }

    pub fn z() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        trim(&mut coeffs);
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rational::from_int(c)).collect())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: Rational, exp: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); exp + 1];
        coeffs[exp] = c;
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Degree {
        degree_of(&self.coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rational::from_int(i as u64))
                .collect(),
        )
    }

    /// Euclidean division: `self = q · divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &RatPoly) -> Result<(RatPoly, RatPoly)> {
        let db = match divisor.degree() {
            Degree::NegInfinity => return Err(Error::DivisionByZero),
            Degree::Finite(n) => n,
        };
        if self.coeffs.len() <= db {
            return Ok((Self::zero(), self.clone()));
        }
        let inv = divisor.leading().unwrap().recip();
        let mut r = self.coeffs.clone();
        let mut q = vec![Rational::zero(); r.len() - db];
        for i in (0..q.len()).rev() {
            if r[i + db].is_zero() {
                continue;
            }
            let c = &r[i + db] * &inv;
            for (j, b) in divisor.coeffs.iter().enumerate() {
                r[i + j] -= &c * b;
            }
            q[i] = c;
        }
        r.truncate(db);
        Ok((Self::new(q), Self::new(r)))
    }

    /// `(integer polynomial, positive scale)` with `scale · self = integer`.
    pub fn clear_denominators(&self) -> (IntPoly, BigInt) {
        let scale = rational::lcm_of_denominators(&self.coeffs);
        let ints = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&scale / c.denom()))
            .collect();
        (IntPoly::new(ints), scale)
    }

    /// Integer view when every coefficient is integral.
    pub fn to_int(&self) -> Option<IntPoly> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.numer().clone()))
            .collect::<Option<Vec<_>>>()
            .map(IntPoly::new)
    }

    /// Monic greatest common divisor.
    ///
    /// Denominators are cleared and the remainder sequence runs over `Z` with
    /// the content stripped at every step; only the final result returns to
    /// `Q`.
    pub fn gcd(&self, other: &RatPoly) -> Result<RatPoly> {
        let (a, _) = self.clear_denominators();
        let (b, _) = other.clear_denominators();
        Ok(a.gcd(&b)?.to_rat().monic())
    }

    /// `p / gcd(p, p')`, monic. Same roots as `p`, each with multiplicity one.
    pub fn squarefree_part(&self) -> Result<RatPoly> {
        let g = self.gcd(&self.derivative())?;
        let (q, r) = self.div_rem(&g)?;
        assert!(
            r.is_zero(),
            "internal consistency fault: gcd does not divide"
        );
        Ok(q.monic())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }
}

impl From<&IntPoly> for RatPoly {
    fn from(p: &IntPoly) -> Self {
        p.to_rat()
    }
}

impl From<IntPoly> for RatPoly {
    fn from(p: IntPoly) -> Self {
        p.to_rat()
    }
}

macro_rules! ring_ops {
    ($ty:ident) => {
        impl Add for &$ty {
            type Output = $ty;
            fn add(self, rhs: &$ty) -> $ty {
                $ty {
                    coeffs: add_coeffs(&self.coeffs, &rhs.coeffs),
                }
            }
        }

        impl Sub for &$ty {
            type Output = $ty;
            fn sub(self, rhs: &$ty) -> $ty {
                $ty {
                    coeffs: sub_coeffs(&self.coeffs, &rhs.coeffs),
                }
            }
        }

        impl Mul for &$ty {
            type Output = $ty;
            fn mul(self, rhs: &$ty) -> $ty {
                $ty {
                    coeffs: mul_coeffs(&self.coeffs, &rhs.coeffs),
                }
            }
        }

        impl Neg for &$ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                $ty {
                    coeffs: self.coeffs.iter().map(|c| -c).collect(),
                }
            }
        }

        impl Add for $ty {
            type Output = $ty;
            fn add(self, rhs: $ty) -> $ty {
                &self + &rhs
            }
        }

        impl Sub for $ty {
            type Output = $ty;
            fn sub(self, rhs: $ty) -> $ty {
                &self - &rhs
            }
        }

        impl Mul for $ty {
            type Output = $ty;
            fn mul(self, rhs: $ty) -> $ty {
                &self * &rhs
            }
        }

        impl Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                -&self
            }
        }

        impl std::iter::Product for $ty {
            fn product<I: Iterator<Item = $ty>>(iter: I) -> $ty {
                iter.fold($ty::one(), |acc, p| &acc * &p)
            }
        }
    };
}

ring_ops!(IntPoly);
ring_ops!(RatPoly);

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

/// Coefficient list, low to high; non-integers are quoted `"p/q"` strings.
impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            if c.is_integer() {
                write!(f, "{}", c.numer())?;
            } else {
                write!(f, "\"{}\"", rational::format_rational(c))?;
            }
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rp(c: &[i64]) -> RatPoly {
        RatPoly::from_i64s(c)
    }

    #[test]
    fn add_examples() {
        assert_eq!(&rp(&[-1, 1]) + &rp(&[1, 1]), rp(&[0, 2]));
        assert_eq!(&rp(&[3, 0, 5]) + &RatPoly::zero(), rp(&[3, 0, 5]));
        let sum = &rp(&[-1, 0, 1]) + &rp(&[1, 0, -1]);
        assert!(sum.is_zero());
        assert!(sum.coeffs().is_empty());
        assert_eq!(sum.degree(), Degree::NegInfinity);
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&rp(&[-1, 1]) * &rp(&[1, 1]), rp(&[-1, 0, 1]));
        // (z-1)(z^2-1) = z^3 - z^2 - z + 1
        assert_eq!(&rp(&[-1, 1]) * &rp(&[-1, 0, 1]), rp(&[1, -1, -1, 1]));
        assert!((&rp(&[1, 2]) * &RatPoly::zero()).is_zero());
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(rp(&[1, -1, -1, 1]).derivative(), rp(&[-1, -2, 3]));
        assert!(rp(&[7]).derivative().is_zero());
        assert_eq!(rp(&[0, 1]).derivative(), rp(&[1]));
    }

    #[test]
    fn div_rem_examples() {
        let (q, r) = rp(&[1, -1, -1, 1]).div_rem(&rp(&[-1, 1])).unwrap();
        assert_eq!(q, rp(&[-1, 0, 1]));
        assert!(r.is_zero());
        let (q, r) = rp(&[1, 0, 1]).div_rem(&rp(&[1, 0, 1])).unwrap();
        assert_eq!((q, r), (rp(&[1]), RatPoly::zero()));
        let (q, r) = rp(&[1, 1]).div_rem(&rp(&[1, 0, 1])).unwrap();
        assert_eq!((q, r), (RatPoly::zero(), rp(&[1, 1])));
        assert_eq!(
            rp(&[1, 1]).div_rem(&RatPoly::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn div_rem_with_fractions() {
        // (z^2 + 1) / (2z + 1) = z/2 - 1/4, remainder 5/4
        let (q, r) = rp(&[1, 0, 1]).div_rem(&rp(&[1, 2])).unwrap();
        assert_eq!(
            q,
            RatPoly::new(vec![rational::ratio(-1, 4), rational::ratio(1, 2)])
        );
        assert_eq!(r, RatPoly::constant(rational::ratio(5, 4)));
    }

    #[test]
    fn gcd_examples() {
        let g = rp(&[1, -1, -1, 1]).gcd(&rp(&[-1, -2, 3])).unwrap();
        assert_eq!(g, rp(&[-1, 1]));
        assert_eq!(rp(&[4, 2]).gcd(&RatPoly::zero()).unwrap(), rp(&[2, 1]));
        assert_eq!(RatPoly::zero().gcd(&rp(&[0, -3])).unwrap(), rp(&[0, 1]));
        assert_eq!(rp(&[-1, 0, 1]).gcd(&rp(&[1, 2, 1])).unwrap(), rp(&[1, 1]));
        assert_eq!(RatPoly::zero().gcd(&RatPoly::zero()), Err(Error::ZeroGcd));
    }

    #[test]
    fn gcd_of_coprime_is_one() {
        assert_eq!(rp(&[1, 0, 1]).gcd(&rp(&[-1, 1])).unwrap(), rp(&[1]));
        assert_eq!(rp(&[5]).gcd(&rp(&[0, 0, 3])).unwrap(), rp(&[1]));
    }

    #[test]
    fn gcd_with_rational_inputs() {
        // (z - 1/2)(z + 1) and (z - 1/2)(z - 3)
        let half = RatPoly::new(vec![rational::ratio(-1, 2), rational::from_int(1)]);
        let a = &half * &rp(&[1, 1]);
        let b = &half * &rp(&[-3, 1]).scale(&rational::ratio(2, 3));
        assert_eq!(a.gcd(&b).unwrap(), half);
    }

    #[test]
    fn content_primitive_examples() {
        let cp = IntPoly::from_i64s(&[-2, 0, 2]).content_primitive().unwrap();
        assert_eq!(cp.content, BigInt::from(2));
        assert_eq!(cp.sign, 1);
        assert_eq!(cp.primitive, IntPoly::from_i64s(&[-1, 0, 1]));

        let cp = IntPoly::from_i64s(&[0, -3]).content_primitive().unwrap();
        assert_eq!(cp.content, BigInt::from(3));
        assert_eq!(cp.sign, -1);
        assert_eq!(cp.primitive, IntPoly::from_i64s(&[0, 1]));

        let cp = IntPoly::from_i64s(&[-1, 0, 1]).content_primitive().unwrap();
        assert_eq!(cp.content, BigInt::from(1));
        assert_eq!(cp.primitive, IntPoly::from_i64s(&[-1, 0, 1]));

        assert_eq!(IntPoly::zero().content_primitive(), Err(Error::ZeroContent));
    }

    #[test]
    fn exact_division_over_integers() {
        let p = IntPoly::from_i64s(&[1, -1, -1, 1]);
        assert_eq!(
            p.div_exact(&IntPoly::from_i64s(&[-1, 1])).unwrap(),
            Some(IntPoly::from_i64s(&[-1, 0, 1]))
        );
        assert_eq!(p.div_exact(&IntPoly::from_i64s(&[1, 0, 1])).unwrap(), None);
        assert_eq!(
            IntPoly::from_i64s(&[1, 1])
                .div_exact(&IntPoly::from_i64s(&[0, 2]))
                .unwrap(),
            None
        );
    }

    #[test]
    fn squarefree_part_of_repeated_roots() {
        // (z-1)^3 (z+2)
        let p = &(&rp(&[-1, 1]) * &rp(&[-1, 1])) * &(&rp(&[-1, 1]) * &rp(&[2, 1]));
        assert_eq!(p.squarefree_part().unwrap(), &rp(&[-1, 1]) * &rp(&[2, 1]));
    }

    #[test]
    fn degree_marker_orders_below_finite() {
        assert!(Degree::NegInfinity < Degree::Finite(0));
        assert_eq!(RatPoly::one().degree(), Degree::Finite(0));
    }

    #[test]
    fn display_is_the_coefficient_list() {
        assert_eq!(rp(&[-1, 0, 1]).to_string(), "[-1, 0, 1]");
        let p = RatPoly::new(vec![rational::ratio(1, 2), rational::from_int(3)]);
        assert_eq!(p.to_string(), "[\"1/2\", 3]");
        assert_eq!(RatPoly::zero().to_string(), "[]");
    }
}
