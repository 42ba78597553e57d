use super::gamma::binomial;
use crate::scalar::Real;

/// Generalized binomials A_j^mu for j = 0..=J.
///
/// Built by the ratio recurrence A_j = A_{j-1}(j + mu)/j, which reaches an exact
/// zero when mu is a negative integer and stays there.
#[derive(Debug, Clone, PartialEq)]
pub struct BinomialTable<T> {
    mu: T,
    values: Vec<T>,
}

impl<T: Real> BinomialTable<T> {
    pub fn new(mu: T, j_max: usize) -> Self {
        let mut values = Vec::with_capacity(j_max + 1);
        let mut a = T::one();
        values.push(a);
        for j in 1..=j_max {
            a = a * (T::idx(j) + mu) / T::idx(j);
            values.push(a);
        }
        Self { mu, values }
    }

    pub fn mu(&self) -> T {
        self.mu
    }

    /// Truncation index J.
    pub fn j_max(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, j: usize) -> T {
        self.values.get(j).copied().unwrap_or_else(|| binomial(j, self.mu))
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }
}

pub fn binomial_table<T: Real>(mu: T, j_max: usize) -> BinomialTable<T> {
    BinomialTable::new(mu, j_max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(binomial_table(0.0f64, 5).values(), &[1.0; 6]);
        assert_eq!(
            binomial_table(-1.0f64, 5).values(),
            &[1.0, 0.0, 0.0, 0.0, 0.0, 0.0]
        );
        assert_eq!(binomial_table(-2.0f64, 3).values(), &[1.0, -1.0, 0.0, 0.0]);
        assert_eq!(binomial_table(-4.0f64, 5).values(), &[1.0, -3.0, 3.0, -1.0, 0.0, 0.0]);
    }

    #[test]
    fn matches_log_gamma_path() {
        for &mu in &[-2.3f64, -1.25, 0.75, 3.5] {
            let t = binomial_table(mu, 2000);
            for j in [100usize, 500, 1999] {
                let lg = binomial(j, mu);
                assert!((t.get(j) - lg).abs() <= 1e-12 * lg.abs(), "mu={mu} j={j}");
            }
        }
    }

    #[test]
    fn decay_band() {
        // |A_j^{-mu-1}| j^{mu+1} approaches 1/|Γ(-mu)| and stays in a narrow band.
        for &mu in &[0.25f64, 0.5, 1.75] {
            let t = binomial_table(-mu - 1.0, 1 << 14);
            let scaled: Vec<f64> = (8..t.values().len())
                .map(|j| t.get(j).abs() * (j as f64).powf(mu + 1.0))
                .collect();
            let lo = scaled.iter().cloned().fold(f64::INFINITY, f64::min);
            let hi = scaled.iter().cloned().fold(0.0, f64::max);
            assert!(hi / lo < 2.0, "mu={mu}: band [{lo}, {hi}]");
        }
    }
}
