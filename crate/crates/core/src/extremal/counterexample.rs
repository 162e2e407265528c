//! Structured reports showing that the original closed form misses the
//! true spectral radius on two concrete instances while the corrected
//! form hits it.

use super::{corrected_formula_even, original_formula_even, ExtremalInstance, AGREEMENT_TOL};
use crate::jsonnum::float17;
use crate::linalg::{adjacency_matrix, spectrum, Spectrum, DEFAULT_CLUSTER_TOL};
use serde_json::{Map, Value};

/// The two known counterexample instances, conventionally labeled "2.1"
/// (n = 10, k = 4) and "2.2" (n = 11, k = 5).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CounterexampleId {
    TenFour,
    ElevenFive,
}

impl CounterexampleId {
    pub const ALL: [CounterexampleId; 2] = [CounterexampleId::TenFour, CounterexampleId::ElevenFive];

    pub fn from_label(label: &str) -> Option<Self> {
        match label {
            "2.1" => Some(CounterexampleId::TenFour),
            "2.2" => Some(CounterexampleId::ElevenFive),
            _ => None,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            CounterexampleId::TenFour => "2.1",
            CounterexampleId::ElevenFive => "2.2",
        }
    }

    pub fn parameters(self) -> (usize, usize) {
        match self {
            CounterexampleId::TenFour => (10, 4),
            CounterexampleId::ElevenFive => (11, 5),
        }
    }

    /// Published spectrum of the instance (extended-precision fixtures).
    fn expected_spectrum(self) -> &'static [(f64, usize)] {
        match self {
            CounterexampleId::TenFour => &[
                (7.898979485566356, 1), // 3 + 2 sqrt 6
                (0.0, 4),
                (-1.0, 3),
                (-1.8989794855663562, 1), // 3 - 2 sqrt 6
                (-3.0, 1),
            ],
            CounterexampleId::ElevenFive => &[
                (9.0, 1),
                (0.0, 4),
                (-1.0, 4),
                (-2.0, 1),
                (-3.0, 1),
            ],
        }
    }
}

/// Everything needed to audit one counterexample run. `status` is ok only
/// when the computed spectrum matches the published one, the original
/// formula does NOT match the spectral radius, and the corrected one does.
#[derive(Debug, Clone)]
pub struct CounterexampleReport {
    pub id: &'static str,
    pub n: usize,
    pub k: usize,
    pub graph6: String,
    pub spectrum: Spectrum,
    pub rho: f64,
    pub original_formula: f64,
    pub corrected_formula: f64,
    pub tolerance: f64,
    pub spectrum_matches: bool,
    pub original_matches: bool,
    pub corrected_matches: bool,
}

impl CounterexampleReport {
    pub fn confirms_correction(&self) -> bool {
        self.spectrum_matches && !self.original_matches && self.corrected_matches
    }

    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("id".into(), Value::String(self.id.into()));
        obj.insert("n".into(), Value::from(self.n));
        obj.insert("k".into(), Value::from(self.k));
        obj.insert("graph6".into(), Value::String(self.graph6.clone()));
        obj.insert(
            "spectrum".into(),
            Value::Array(
                self.spectrum
                    .pairs()
                    .iter()
                    .map(|&(v, m)| {
                        Value::Array(vec![Value::Number(float17(v)), Value::from(m)])
                    })
                    .collect(),
            ),
        );
        obj.insert("rho".into(), Value::Number(float17(self.rho)));
        obj.insert(
            "original_formula".into(),
            Value::Number(float17(self.original_formula)),
        );
        obj.insert(
            "corrected_formula".into(),
            Value::Number(float17(self.corrected_formula)),
        );
        obj.insert("spectrum_matches".into(), Value::Bool(self.spectrum_matches));
        obj.insert("original_matches".into(), Value::Bool(self.original_matches));
        obj.insert(
            "corrected_matches".into(),
            Value::Bool(self.corrected_matches),
        );
        Value::Object(obj)
    }
}

/// Runs one counterexample at the default agreement tolerance (1e-8).
pub fn reproduce_counterexample(id: CounterexampleId) -> CounterexampleReport {
    reproduce_counterexample_with_tol(id, AGREEMENT_TOL)
}

pub fn reproduce_counterexample_with_tol(id: CounterexampleId, tol: f64) -> CounterexampleReport {
    let (n, k) = id.parameters();
    let inst = ExtremalInstance::new(n, k).expect("both instances are valid");
    let g = inst.build();
    let a = adjacency_matrix(&g);
    let spec = spectrum(&a, DEFAULT_CLUSTER_TOL);
    let rho = spec.radius();
    let original = original_formula_even(n, k).expect("even parity");
    let corrected = corrected_formula_even(n, k).expect("even parity");
    CounterexampleReport {
        id: id.label(),
        n,
        k,
        graph6: g.to_graph6(),
        spectrum_matches: spec.matches(id.expected_spectrum(), tol),
        original_matches: (original - rho).abs() <= tol,
        corrected_matches: (corrected - rho).abs() <= tol,
        spectrum: spec,
        rho,
        original_formula: original,
        corrected_formula: corrected,
        tolerance: tol,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_reports_confirm_the_correction() {
        for id in CounterexampleId::ALL {
            let report = reproduce_counterexample(id);
            assert!(report.spectrum_matches, "{}: spectrum", report.id);
            assert!(!report.original_matches, "{}: original", report.id);
            assert!(report.corrected_matches, "{}: corrected", report.id);
            assert!(report.confirms_correction());
        }
    }

    #[test]
    fn first_report_values() {
        let r = reproduce_counterexample(CounterexampleId::TenFour);
        assert_eq!((r.n, r.k), (10, 4));
        assert_eq!(r.graph6, "I~~vf~}~_");
        assert!((r.rho - 7.898979485566356).abs() < 1e-9);
        assert!((r.original_formula - r.rho - 0.050767982739476476).abs() < 1e-9);
    }

    #[test]
    fn second_report_values() {
        let r = reproduce_counterexample(CounterexampleId::ElevenFive);
        assert_eq!((r.n, r.k), (11, 5));
        assert_eq!(r.graph6, "J~~~vr~~v}?");
        assert!((r.rho - 9.0).abs() < 1e-9);
        assert!((r.original_formula - r.rho - 0.09016994374947424).abs() < 1e-9);
    }

    #[test]
    fn labels_round_trip() {
        for id in CounterexampleId::ALL {
            assert_eq!(CounterexampleId::from_label(id.label()), Some(id));
        }
        assert_eq!(CounterexampleId::from_label("3.1"), None);
    }

    #[test]
    fn json_shape_is_stable() {
        let v = reproduce_counterexample(CounterexampleId::TenFour).to_json();
        let obj = v.as_object().unwrap();
        let keys: Vec<&str> = obj.keys().map(String::as_str).collect();
        assert_eq!(
            keys,
            vec![
                "id",
                "n",
                "k",
                "graph6",
                "spectrum",
                "rho",
                "original_formula",
                "corrected_formula",
                "spectrum_matches",
                "original_matches",
                "corrected_matches"
            ]
        );
        let rho: f64 = serde_json::from_value(obj["rho"].clone()).unwrap();
        assert!((rho - 7.898979485566356).abs() < 1e-12);
        assert_eq!(obj["spectrum"].as_array().unwrap().len(), 5);
    }
}
