//! The estimator registry: every norm routine behind one trait, looked up
//! by name at runtime.

use crate::error::{Error, Result};
use crate::operator::OperatorMatrix;

use super::{brute, exact, power, NormEstimate};

/// A norm-estimation strategy. `supports` reports whether the strategy can
/// handle the operator (its exponent and dimension); `estimate` runs it.
pub trait NormEstimator: Send + Sync {
    fn name(&self) -> &'static str;
    fn supports(&self, a: &OperatorMatrix) -> bool;
    fn estimate(&self, a: &OperatorMatrix) -> Result<NormEstimate>;
}

/// Closed forms at p in {1, 2, inf}.
#[derive(Debug, Clone, Copy, Default)]
pub struct ExactFormula;

impl NormEstimator for ExactFormula {
    fn name(&self) -> &'static str {
        "exact"
    }

    fn supports(&self, a: &OperatorMatrix) -> bool {
        let p = a.ambient();
        p.is_one() || p.is_two() || p.is_inf()
    }

    fn estimate(&self, a: &OperatorMatrix) -> Result<NormEstimate> {
        exact::estimate(a)
    }
}

/// Dual-map power iteration; deterministic given the seed.
#[derive(Debug, Clone, Copy)]
pub struct PowerIteration {
    pub seed: u64,
    pub max_iter: usize,
    pub restarts: usize,
}

impl PowerIteration {
    pub fn new(seed: u64) -> PowerIteration {
        PowerIteration {
            seed,
            max_iter: 10_000,
            restarts: power::DEFAULT_RESTARTS,
        }
    }
}

impl NormEstimator for PowerIteration {
    fn name(&self) -> &'static str {
        "power"
    }

    fn supports(&self, a: &OperatorMatrix) -> bool {
        a.ambient().is_smooth()
    }

    fn estimate(&self, a: &OperatorMatrix) -> Result<NormEstimate> {
        power::estimate(a, self.seed, self.max_iter, self.restarts)
    }
}

/// Grid-plus-refinement search; dimension <= 4. A `resolution` of 0 picks a
/// per-axis sample count suited to the dimension.
#[derive(Debug, Clone, Copy)]
pub struct BruteForce {
    pub resolution: usize,
}

impl BruteForce {
    pub fn auto_resolution() -> BruteForce {
        BruteForce { resolution: 0 }
    }

    fn resolution_for(&self, n: usize) -> usize {
        if self.resolution > 0 {
            return self.resolution;
        }
        match n {
            0..=2 => 801,
            3 => 61,
            _ => 21,
        }
    }
}

impl NormEstimator for BruteForce {
    fn name(&self) -> &'static str {
        "brute"
    }

    fn supports(&self, a: &OperatorMatrix) -> bool {
        a.dim() <= 4
    }

    fn estimate(&self, a: &OperatorMatrix) -> Result<NormEstimate> {
        brute::estimate(a, self.resolution_for(a.dim()))
    }
}

/// Named estimators in priority order. `auto` walks the order and runs the
/// first one that supports the operator: exact formulas when the exponent
/// has one, brute force in small dimension, power iteration otherwise.
pub struct EstimatorRegistry {
    entries: Vec<Box<dyn NormEstimator>>,
}

impl EstimatorRegistry {
    pub fn new() -> EstimatorRegistry {
        EstimatorRegistry {
            entries: Vec::new(),
        }
    }

    /// The standard trio in auto order.
    pub fn with_defaults(seed: u64) -> EstimatorRegistry {
        let mut registry = EstimatorRegistry::new();
        registry.register(Box::new(ExactFormula));
        registry.register(Box::new(BruteForce::auto_resolution()));
        registry.register(Box::new(PowerIteration::new(seed)));
        registry
    }

    /// Later registrations with the same name shadow earlier ones.
    pub fn register(&mut self, estimator: Box<dyn NormEstimator>) {
        if let Some(slot) = self
            .entries
            .iter_mut()
            .find(|e| e.name() == estimator.name())
        {
            *slot = estimator;
        } else {
            self.entries.push(estimator);
        }
    }

    pub fn get(&self, name: &str) -> Option<&dyn NormEstimator> {
        self.entries
            .iter()
            .find(|e| e.name() == name)
            .map(|e| e.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|e| e.name()).collect()
    }

    /// Runs the named estimator; unknown names and unsupported operators
    /// are errors.
    pub fn estimate_with(&self, name: &str, a: &OperatorMatrix) -> Result<NormEstimate> {
        let estimator = self
            .get(name)
            .ok_or_else(|| Error::UnknownEstimator(name.to_string()))?;
        estimator.estimate(a)
    }

    /// First registered estimator that supports the operator.
    pub fn auto(&self, a: &OperatorMatrix) -> Result<NormEstimate> {
        for estimator in &self.entries {
            if estimator.supports(a) {
                return estimator.estimate(a);
            }
        }
        Err(Error::UnknownEstimator("auto".to_string()))
    }
}

impl Default for EstimatorRegistry {
    fn default() -> Self {
        EstimatorRegistry::with_defaults(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exponent::Exponent;
    use crate::opnorm::Method;

    fn p(v: f64) -> Exponent {
        Exponent::finite(v).unwrap()
    }

    #[test]
    fn auto_selection_rules() {
        let registry = EstimatorRegistry::with_defaults(0);

        // special exponent: exact formulas even in large dimension
        let a = OperatorMatrix::identity(6, Exponent::INF).unwrap();
        assert_eq!(registry.auto(&a).unwrap().method, Method::ExactInf);

        let a = OperatorMatrix::identity(6, Exponent::TWO).unwrap();
        assert_eq!(registry.auto(&a).unwrap().method, Method::Exact2);

        // small dimension, general exponent: brute force
        let a = OperatorMatrix::identity(3, p(3.0)).unwrap();
        assert_eq!(registry.auto(&a).unwrap().method, Method::Brute);

        // large dimension, general exponent: power iteration
        let a = OperatorMatrix::identity(5, p(3.0)).unwrap();
        assert_eq!(registry.auto(&a).unwrap().method, Method::Power);
    }

    #[test]
    fn lookup_by_name() {
        let registry = EstimatorRegistry::with_defaults(0);
        assert_eq!(registry.names(), vec!["exact", "brute", "power"]);
        assert!(registry.get("power").is_some());
        assert!(registry.get("magic").is_none());

        let a = OperatorMatrix::identity(2, p(3.0)).unwrap();
        assert!(matches!(
            registry.estimate_with("magic", &a),
            Err(Error::UnknownEstimator(_))
        ));
        let est = registry.estimate_with("power", &a).unwrap();
        assert!((est.lower - 1.0).abs() < 1e-9);
    }

    #[test]
    fn registration_shadows_by_name() {
        let mut registry = EstimatorRegistry::with_defaults(0);
        registry.register(Box::new(BruteForce { resolution: 11 }));
        assert_eq!(registry.names().len(), 3);
    }
}
