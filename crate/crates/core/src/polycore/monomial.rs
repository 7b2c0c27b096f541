use std::cmp::Ordering;
use std::fmt;

/// Exponent vector of a monomial `x1^a1 * x2^a2 * ...`.
///
/// Variables are 1-based; `exponents()[i]` is the exponent of `x_{i+1}`.
/// Trailing zero exponents are never stored, so the constant monomial is the
/// empty vector and equal monomials have equal representations.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    /// `x_var^exp` with `var` 1-based.
    pub fn var_pow(var: usize, exp: u32) -> Self {
        assert!(var >= 1, "variables are 1-based");
        if exp == 0 {
            return Monomial::one();
        }
        let mut exps = vec![0; var];
        exps[var - 1] = exp;
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Exponent of `x_var` (1-based); zero for variables beyond the stored prefix.
    pub fn exponent(&self, var: usize) -> u32 {
        var.checked_sub(1)
            .and_then(|i| self.0.get(i))
            .copied()
            .unwrap_or(0)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    /// Highest variable index with a nonzero exponent, or 0 for the constant.
    pub fn max_var(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.0.len() >= other.0.len() {
            (&self.0, &other.0)
        } else {
            (&other.0, &self.0)
        };
        let mut exps = long.clone();
        for (e, s) in exps.iter_mut().zip(short) {
            *e += s;
        }
        Monomial(exps)
    }

    /// Multiplies every exponent by `m`.
    pub fn scale_exponents(&self, m: u32) -> Monomial {
        if m == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|e| e * m).collect())
    }
}

/// Graded lexicographic: total degree first, then exponent vectors compared
/// left to right. Trimmed vectors compare correctly under `Vec`'s ordering
/// because a strict prefix is always followed by a nonzero entry.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
