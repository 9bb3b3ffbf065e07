//! Scalars: the cyclotomic field `K = Q(w)` with `w^4 = -1`.
//!
//! Every element is stored as `c0 + c1*w + c2*w^2 + c3*w^3` with rational
//! coefficients, reduced modulo the minimal polynomial `w^4 + 1`. The
//! square `i := w^2` is a primitive fourth root of unity, so all fourth
//! roots of unity (the parameters of the algebra families) live here.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::ExactError;

/// Arbitrary-precision rational scalar. `num_rational` keeps values in
/// lowest terms with a positive denominator, which is exactly the
/// canonical form required here.
pub type Rational = num_rational::BigRational;

/// Parse a rational from the `"p/q"` dump format (plain `"p"` is allowed).
pub fn rational_from_str(s: &str) -> Result<Rational, ExactError> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| ExactError::Parse(s.to_string()))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| ExactError::Parse(s.to_string()))?;
    if d.is_zero() {
        return Err(ExactError::Parse(s.to_string()));
    }
    Ok(Rational::new(n, d))
}

/// Render a rational as `"p/q"` in lowest terms, `q > 0`, `"0/1"` for zero.
pub fn rational_to_str(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// An element of `K = Q(w)/(w^4 + 1)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclo {
    coeffs: [Rational; 4],
}

impl Cyclo {
    pub fn new(coeffs: [Rational; 4]) -> Self {
        Cyclo { coeffs }
    }

    pub fn zero() -> Self {
        Cyclo::new([
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
        ])
    }

    pub fn one() -> Self {
        Cyclo::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        let mut c = Cyclo::zero();
        c.coeffs[0] = Rational::from_integer(BigInt::from(n));
        c
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut c = Cyclo::zero();
        c.coeffs[0] = r;
        c
    }

    /// `p/q` as a scalar.
    pub fn ratio(p: i64, q: i64) -> Self {
        Cyclo::from_rational(Rational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// The generator `w`, a primitive eighth root of unity.
    pub fn omega() -> Self {
        Cyclo::omega_pow(1)
    }

    /// `i = w^2`, a primitive fourth root of unity.
    pub fn iota() -> Self {
        Cyclo::omega_pow(2)
    }

    /// `w^j` for any integer exponent, reduced via `w^4 = -1`.
    pub fn omega_pow(j: i64) -> Self {
        let j = j.rem_euclid(8) as usize;
        let mut c = Cyclo::zero();
        let (idx, sign) = if j < 4 { (j, 1) } else { (j - 4, -1) };
        c.coeffs[idx] = Rational::from_integer(BigInt::from(sign));
        c
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[Rational; 4] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// True iff the element lies in the prime field `Q`.
    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        if self.is_rational() {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyclo::new([
            &self.coeffs[0] * r,
            &self.coeffs[1] * r,
            &self.coeffs[2] * r,
            &self.coeffs[3] * r,
        ])
    }

    /// Field automorphism `w -> w^k` for odd `k`; the four of them are the
    /// Galois conjugations of `K/Q`.
    pub fn galois(&self, k: usize) -> Self {
        debug_assert!(k % 2 == 1);
        let mut out = Cyclo::zero();
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = (j * k) % 8;
            let (idx, neg) = if e < 4 { (e, false) } else { (e - 4, true) };
            if neg {
                out.coeffs[idx] -= c;
            } else {
                out.coeffs[idx] += c;
            }
        }
        out
    }

    /// Multiplicative inverse via the field norm: the product of the three
    /// nontrivial Galois conjugates divided by `N(a) = a * that product`,
    /// which is rational.
    pub fn inv(&self) -> Result<Cyclo, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let conj = &(&self.galois(3) * &self.galois(5)) * &self.galois(7);
        let norm = self * &conj;
        let n = norm
            .as_rational()
            .expect("norm of a cyclotomic element is rational")
            .clone();
        debug_assert!(!n.is_zero());
        Ok(conj.scale(&n.recip()))
    }

    pub fn pow(&self, mut e: u32) -> Cyclo {
        let mut base = self.clone();
        let mut acc = Cyclo::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Serialize as the four-string array of the dump format.
    pub fn to_strings(&self) -> [String; 4] {
        [
            rational_to_str(&self.coeffs[0]),
            rational_to_str(&self.coeffs[1]),
            rational_to_str(&self.coeffs[2]),
            rational_to_str(&self.coeffs[3]),
        ]
    }

    pub fn from_strings(s: &[String; 4]) -> Result<Cyclo, ExactError> {
        Ok(Cyclo::new([
            rational_from_str(&s[0])?,
            rational_from_str(&s[1])?,
            rational_from_str(&s[2])?,
            rational_from_str(&s[3])?,
        ]))
    }
}

impl serde::Serialize for Cyclo {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(serializer)
    }
}

impl<'de> serde::Deserialize<'de> for Cyclo {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = <[String; 4]>::deserialize(deserializer)?;
        Cyclo::from_strings(&s).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if j == 0 {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "w^{}", j)?;
            } else {
                write!(f, "{}*w^{}", abs, j)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: &Cyclo) -> Cyclo {
        Cyclo::new([
            &self.coeffs[0] + &rhs.coeffs[0],
            &self.coeffs[1] + &rhs.coeffs[1],
            &self.coeffs[2] + &rhs.coeffs[2],
            &self.coeffs[3] + &rhs.coeffs[3],
        ])
    }
}

impl Sub for &Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: &Cyclo) -> Cyclo {
        Cyclo::new([
            &self.coeffs[0] - &rhs.coeffs[0],
            &self.coeffs[1] - &rhs.coeffs[1],
            &self.coeffs[2] - &rhs.coeffs[2],
            &self.coeffs[3] - &rhs.coeffs[3],
        ])
    }
}

impl Mul for &Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: &Cyclo) -> Cyclo {
        // Schoolbook product reduced via w^4 = -1.
        let a = &self.coeffs;
        let b = &rhs.coeffs;
        let mut out = [
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
        ];
        for i in 0..4 {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                if b[j].is_zero() {
                    continue;
                }
                let p = &a[i] * &b[j];
                let e = i + j;
                if e < 4 {
                    out[e] += p;
                } else {
                    out[e - 4] -= p;
                }
            }
        }
        Cyclo::new(out)
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo::new([
            -&self.coeffs[0],
            -&self.coeffs[1],
            -&self.coeffs[2],
            -&self.coeffs[3],
        ])
    }
}

impl Add for Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: Cyclo) -> Cyclo {
        &self + &rhs
    }
}

impl Sub for Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: Cyclo) -> Cyclo {
        &self - &rhs
    }
}

impl Mul for Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: Cyclo) -> Cyclo {
        &self * &rhs
    }
}

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -&self
    }
}

impl AddAssign<&Cyclo> for Cyclo {
    fn add_assign(&mut self, rhs: &Cyclo) {
        for i in 0..4 {
            self.coeffs[i] += &rhs.coeffs[i];
        }
    }
}

impl SubAssign<&Cyclo> for Cyclo {
    fn sub_assign(&mut self, rhs: &Cyclo) {
        for i in 0..4 {
            self.coeffs[i] -= &rhs.coeffs[i];
        }
    }
}

impl MulAssign<&Cyclo> for Cyclo {
    fn mul_assign(&mut self, rhs: &Cyclo) {
        *self = &*self * rhs;
    }
}

/// The four fourth roots of unity, the admissible parameter values.
pub fn fourth_roots() -> [Cyclo; 4] {
    [
        Cyclo::one(),
        -&Cyclo::one(),
        Cyclo::iota(),
        -&Cyclo::iota(),
    ]
}

/// True iff `z^4 = 1` and `z^2 != 1` (i.e. `z = +-i`).
pub fn is_primitive_fourth_root(z: &Cyclo) -> bool {
    z.pow(4).is_one() && !z.pow(2).is_one()
}

/// ASCII spelling used in the CLI and fixture file names.
pub fn root_name(z: &Cyclo) -> Option<&'static str> {
    if z.is_one() {
        Some("1")
    } else if (-z).is_one() {
        Some("-1")
    } else if *z == Cyclo::iota() {
        Some("i")
    } else if *z == -&Cyclo::iota() {
        Some("-i")
    } else {
        None
    }
}

/// Parse the CLI spelling of a fourth root of unity.
pub fn root_from_name(s: &str) -> Result<Cyclo, ExactError> {
    match s {
        "1" => Ok(Cyclo::one()),
        "-1" => Ok(-&Cyclo::one()),
        "i" => Ok(Cyclo::iota()),
        "-i" => Ok(-&Cyclo::iota()),
        _ => Err(ExactError::Parse(s.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_relations() {
        let w = Cyclo::omega();
        assert!(w.pow(8).is_one());
        assert_eq!(w.pow(4), -&Cyclo::one());
        let i = Cyclo::iota();
        assert_eq!(i, w.pow(2));
        assert_eq!(&i * &i, -&Cyclo::one());
    }

    #[test]
    fn mul_examples() {
        let w = Cyclo::omega();
        // w * w^3 = w^4 = -1
        assert_eq!(&w * &w.pow(3), -&Cyclo::one());
        // ((1+i)/2)((1-i)/2) = 1/2
        let i = Cyclo::iota();
        let half = Cyclo::ratio(1, 2);
        let a = (&Cyclo::one() + &i).scale(half.as_rational().unwrap());
        let b = (&Cyclo::one() - &i).scale(half.as_rational().unwrap());
        assert_eq!(&a * &b, Cyclo::ratio(1, 2));
    }

    #[test]
    fn inv_examples() {
        let w = Cyclo::omega();
        assert_eq!(w.inv().unwrap(), -&w.pow(3));
        assert_eq!(Cyclo::from_int(2).inv().unwrap(), Cyclo::ratio(1, 2));
        let i = Cyclo::iota();
        let one_plus_i = &Cyclo::one() + &i;
        let expect = (&Cyclo::one() - &i).scale(Cyclo::ratio(1, 2).as_rational().unwrap());
        assert_eq!(one_plus_i.inv().unwrap(), expect);
        assert!(Cyclo::zero().inv().is_err());
    }

    #[test]
    fn string_round_trip() {
        let z = &Cyclo::ratio(-3, 7) + &Cyclo::omega_pow(3).scale(Cyclo::ratio(5, 2).as_rational().unwrap());
        let s = z.to_strings();
        assert_eq!(Cyclo::from_strings(&s).unwrap(), z);
        assert_eq!(Cyclo::zero().to_strings()[0], "0/1");
    }

    #[test]
    fn primitivity() {
        assert!(is_primitive_fourth_root(&Cyclo::iota()));
        assert!(is_primitive_fourth_root(&-&Cyclo::iota()));
        assert!(!is_primitive_fourth_root(&Cyclo::one()));
        assert!(!is_primitive_fourth_root(&-&Cyclo::one()));
    }
}
