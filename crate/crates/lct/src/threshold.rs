use std::fmt;

use polyring::{fmt_rat, Rat};
use serde::Serialize;

use crate::curve::ResolutionTree;
use crate::pencil::PencilCertificate;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Kind {
    Exact,
    UpperBound,
    LowerBound,
}

impl Kind {
    /// Kind of a sum: equal kinds persist, `Exact` yields to the other, and
    /// opposite bounds say nothing.
    pub fn combine(self, other: Kind) -> Option<Kind> {
        match (self, other) {
            (a, b) if a == b => Some(a),
            (Kind::Exact, k) | (k, Kind::Exact) => Some(k),
            _ => None,
        }
    }
}

/// Why a threshold holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// Embedded resolution of a plane curve; realizes both bounds.
    Resolution(ResolutionTree),
    /// `Σw / w(f)`; `exact_reason` names the lower-bound argument when the
    /// bound was upgraded to an equality.
    Weights {
        weights: Vec<Rat>,
        raw: Rat,
        exact_reason: Option<String>,
    },
    Sum(Box<Threshold>, Box<Threshold>),
    Pencil(Box<PencilCertificate>),
    /// A value quoted from the literature rather than computed.
    Recorded {
        citation: String,
        strict: bool,
    },
    /// Immediate facts such as smoothness.
    Direct(String),
}

impl Certificate {
    pub fn summary(&self) -> String {
        match self {
            Certificate::Resolution(t) => {
                let ids: Vec<String> = t.realizing.iter().map(|i| format!("E{i}")).collect();
                format!(
                    "resolution with {} exceptional divisors; realized by {}",
                    t.nodes.len(),
                    if ids.is_empty() { "the curve".to_string() } else { ids.join(", ") }
                )
            }
            Certificate::Weights { weights, raw, exact_reason } => {
                let w: Vec<String> = weights.iter().map(fmt_rat).collect();
                let mut s = format!("weights ({}), sum/order = {}", w.join(","), fmt_rat(raw));
                if let Some(r) = exact_reason {
                    s.push_str("; equality: ");
                    s.push_str(r);
                }
                s
            }
            Certificate::Sum(a, b) => format!("sum of [{}] and [{}]", a, b),
            Certificate::Pencil(p) => format!(
                "pencil restriction at {} parameters, witness degree {}",
                p.samples.len(),
                p.witness.degree().unwrap_or(0)
            ),
            Certificate::Recorded { citation, strict } => {
                format!("recorded{}: {citation}", if *strict { " (strict)" } else { "" })
            }
            Certificate::Direct(s) => s.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Threshold {
    pub value: Rat,
    pub kind: Kind,
    pub certificate: Certificate,
}

impl Threshold {
    /// A threshold quoted from the literature as `> value`.
    pub fn recorded_strict_lower(value: Rat, citation: &str) -> Threshold {
        Threshold {
            value,
            kind: Kind::LowerBound,
            certificate: Certificate::Recorded { citation: citation.to_string(), strict: true },
        }
    }

    pub fn is_strict(&self) -> bool {
        matches!(self.certificate, Certificate::Recorded { strict: true, .. })
    }
}

impl fmt::Display for Threshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = match (self.kind, self.is_strict()) {
            (Kind::Exact, _) => "=",
            (Kind::UpperBound, _) => "<=",
            (Kind::LowerBound, true) => ">",
            (Kind::LowerBound, false) => ">=",
        };
        write!(f, "lct {rel} {}", fmt_rat(&self.value))
    }
}
