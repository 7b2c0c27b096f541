use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Monomial;
use crate::error::{Error, Result};

/// Sparse multivariate polynomial with arbitrary-precision integer coefficients.
///
/// Zero coefficients are never stored, so structural equality is polynomial
/// equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Polynomial::term(c, Monomial::one())
    }

    /// The variable `x_var`, 1-based.
    pub fn var(var: usize) -> Self {
        Polynomial::term(1, Monomial::var_pow(var, 1))
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    /// Builds a polynomial from possibly repeated terms, merging and dropping zeros.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Terms in ascending graded lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// Terms in output order: descending graded lexicographic.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn max_var(&self) -> usize {
        self.terms.keys().map(Monomial::max_var).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Multiplies by the monomial `m`.
    pub fn shift(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.mul(m), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact value at `point`, where `point[i]` is the value of `x_{i+1}`.
    pub fn eval(&self, point: &[BigInt]) -> Result<BigInt> {
        let needed = self.max_var();
        if point.len() < needed {
            return Err(Error::Dimension {
                needed,
                supplied: point.len(),
            });
        }
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t *= Pow::pow(v, e);
                }
            }
            total += t;
        }
        Ok(total)
    }

    /// Substitutes `x_i -> x_i^m` for every variable.
    pub fn substitute_power(&self, m: u32) -> Polynomial {
        assert!(m >= 1, "power substitution needs m >= 1");
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.scale_exponents(m), v.clone()))
                .collect(),
        }
    }

    /// Coefficient vector `[c0, c1, ...]` when the polynomial only uses `x1`.
    pub fn univariate_coeffs(&self) -> Option<Vec<BigInt>> {
        if self.max_var() > 1 {
            return None;
        }
        let deg = self.degree().unwrap_or(0) as usize;
        let mut out = vec![BigInt::zero(); deg + 1];
        for (m, c) in &self.terms {
            out[m.exponent(1) as usize] = c.clone();
        }
        Some(out)
    }

    /// Canonical JSON form: `[{"coeff": "...", "exps": [...]}, ...]`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("polynomial serialization is infallible")
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    coeff: String,
    exps: Vec<u32>,
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<JsonTerm> = self
            .terms_desc()
            .map(|(m, c)| JsonTerm {
                coeff: c.to_string(),
                exps: m.exponents().to_vec(),
            })
            .collect();
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<JsonTerm>::deserialize(deserializer)?;
        let mut p = Polynomial::zero();
        for t in terms {
            let c: BigInt = t.coeff.parse().map_err(D::Error::custom)?;
            p.add_term(Monomial::new(t.exps), c);
        }
        Ok(p)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms_desc().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{m}")?;
            } else if c.is_negative() && c.abs().is_one() {
                write!(f, "-{m}")?;
            } else {
                write!(f, "{c}*{m}")?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        self += &rhs;
        self
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut acc: HashMap<Monomial, BigInt> =
            HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *acc.entry(ma.mul(mb)).or_default() += ca * cb;
            }
        }
        Polynomial {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl<'a> Sum<&'a Polynomial> for Polynomial {
    fn sum<I: Iterator<Item = &'a Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::zero(), |mut acc, p| {
            acc += p;
            acc
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> Polynomial {
        Polynomial::var(i)
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&a| BigInt::from(a)).collect()
    }

    #[test]
    fn additive_inverse_is_empty() {
        let p = &x(1) + &(-x(1));
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
        assert_eq!(p.to_string(), "0");
    }

    #[test]
    fn merge_cubes_with_triple_product() {
        let cubes = &x(1).pow(3) + &x(2).pow(3);
        let triple = &(&x(1) * &x(2)) * &x(3);
        let p = &cubes + &triple;
        assert_eq!(p.num_terms(), 3);
        assert_eq!(p.to_string(), "x1^3 + x1*x2*x3 + x2^3");
    }

    #[test]
    fn zero_is_additive_identity_and_absorbing() {
        let p = &x(1) + &Polynomial::constant(7);
        assert_eq!(&Polynomial::zero() + &p, p);
        assert!((&p * &Polynomial::zero()).is_zero());
    }

    #[test]
    fn binomial_product() {
        let one = Polynomial::one();
        let p = &(&one + &x(1)) * &(&one + &x(2));
        assert_eq!(p.to_string(), "x1*x2 + x1 + x2 + 1");
    }

    #[test]
    fn omega_3_2_by_hand() {
        // x(x+1)(x+4)
        let p = &(&x(1) * &(&x(1) + &Polynomial::one())) * &(&x(1) + &Polynomial::constant(4));
        assert_eq!(p.to_string(), "x1^3 + 5*x1^2 + 4*x1");
        assert_eq!(p.univariate_coeffs().unwrap(), ints(&[0, 4, 5, 1]));
    }

    #[test]
    fn evaluation() {
        let p = &x(1).pow(3) + &x(2).pow(3);
        assert_eq!(p.eval(&ints(&[1, 2])).unwrap(), BigInt::from(9));
        assert_eq!(Polynomial::one().eval(&[]).unwrap(), BigInt::from(1));
        let m = &p + &(&(&x(1) * &x(2)) * &x(3));
        let m = &m + &x(3).pow(3);
        assert_eq!(m.eval(&ints(&[1, 2, 3])).unwrap(), BigInt::from(42));
    }

    #[test]
    fn evaluation_dimension_error() {
        let p = x(3);
        assert_eq!(
            p.eval(&ints(&[1, 2])),
            Err(Error::Dimension {
                needed: 3,
                supplied: 2
            })
        );
    }

    #[test]
    fn power_substitution() {
        let p = &x(1) + &x(2);
        assert_eq!(p.substitute_power(2), &x(1).pow(2) + &x(2).pow(2));
        let e2 = &x(1) * &x(2);
        assert_eq!(e2.substitute_power(4).to_string(), "x1^4*x2^4");
    }

    #[test]
    fn negative_coefficients_print() {
        let p = &x(1) - &(&x(2) + &x(2));
        assert_eq!(p.to_string(), "x1 + -2*x2");
        assert_eq!((-x(1)).to_string(), "-x1");
    }

    #[test]
    fn json_form() {
        let p = &(&x(1).pow(3) + &Polynomial::constant(-2)) + &x(2);
        let j = serde_json::to_string(&p).unwrap();
        assert_eq!(
            j,
            r#"[{"coeff":"1","exps":[3]},{"coeff":"1","exps":[0,1]},{"coeff":"-2","exps":[]}]"#
        );
        let back: Polynomial = serde_json::from_str(&j).unwrap();
        assert_eq!(back, p);
    }
}
