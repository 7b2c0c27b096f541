use super::{Monomial, Polynomial};

/// Power series in a formal parameter `t`, kept up to and including
/// `t^degree_bound`, with polynomial coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Polynomial>,
}

impl TruncatedSeries {
    pub fn zero(degree_bound: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Polynomial::zero(); degree_bound + 1],
        }
    }

    pub fn one(degree_bound: usize) -> Self {
        let mut s = TruncatedSeries::zero(degree_bound);
        s.coeffs[0] = Polynomial::one();
        s
    }

    /// Pads with zeros or truncates so that exactly `degree_bound + 1`
    /// coefficients remain.
    pub fn from_coeffs(degree_bound: usize, mut coeffs: Vec<Polynomial>) -> Self {
        coeffs.resize(degree_bound + 1, Polynomial::zero());
        TruncatedSeries { coeffs }
    }

    pub fn degree_bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^k`; zero beyond the bound.
    pub fn coeff(&self, k: usize) -> Polynomial {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let bound = self.degree_bound().min(other.degree_bound());
        TruncatedSeries {
            coeffs: (0..=bound)
                .map(|k| &self.coeffs[k] + &other.coeffs[k])
                .collect(),
        }
    }

    /// Cauchy product truncated at the smaller of the two bounds.
    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let bound = self.degree_bound().min(other.degree_bound());
        let mut out = TruncatedSeries::zero(bound);
        for (i, a) in self.coeffs.iter().enumerate().take(bound + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(bound + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                out.coeffs[i + j] += &(a * b);
            }
        }
        out
    }

    /// Series of `sum_j (x_var t)^(step*j + offset)` for every admissible exponent.
    pub(crate) fn var_powers(
        degree_bound: usize,
        var: usize,
        exponents: impl IntoIterator<Item = usize>,
    ) -> Self {
        let mut s = TruncatedSeries::zero(degree_bound);
        for e in exponents.into_iter().filter(|&e| e <= degree_bound) {
            s.coeffs[e] += &Polynomial::term(1, Monomial::var_pow(var, e as u32));
        }
        s
    }
}
