//! Exact log canonical thresholds of plane curve germs by embedded
//! resolution: iterated point blow-ups until the total transform is snc.

use num_traits::{One, Zero};
use polyring::{blowup_chart, BinaryForm, Germ, Monomial, Rat};

use crate::threshold::{Certificate, Kind, Threshold};
use crate::LctError;

/// One exceptional divisor of the resolution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Node {
    pub id: usize,
    /// Multiplicity of the strict transform at the blown-up point.
    pub strict_mult: u32,
    /// Multiplicity of the total transform of the curve along the divisor.
    pub m: u32,
    /// Discrepancy: coefficient of the divisor in `K_Y - π^*K_X`.
    pub k: u32,
    /// Order of the maximal ideal of the origin along the divisor.
    pub e: u32,
    pub parents: Vec<usize>,
}

impl Node {
    /// Log discrepancy over multiplicity, `(k + 1) / m`.
    pub fn ratio(&self) -> Rat {
        Rat::new((self.k + 1).into(), self.m.into())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ResolutionTree {
    pub nodes: Vec<Node>,
    /// Ids of the divisors attaining the threshold (empty when the curve
    /// itself does, i.e. the threshold is 1).
    pub realizing: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Axis {
    U,
    V,
}

#[derive(Clone, Copy, Debug)]
struct Div {
    node: usize,
    axis: Axis,
}

const MAX_NODES: usize = 4096;

struct Resolver {
    nodes: Vec<Node>,
    delta: u64,
    delta_cap: u64,
    order: Option<u32>,
}

impl Resolver {
    fn visit(&mut self, h: Germ, divs: Vec<Div>) -> Result<(), LctError> {
        if !h.coeff_of(&[0, 0]).is_zero() {
            return Ok(());
        }
        let mult = h.mult().ok_or(LctError::NonReduced)?;
        let blow = match (mult, divs.as_slice()) {
            (m, _) if m >= 2 => true,
            (_, [_, _]) => true,
            (_, [d]) => {
                // tangent line a·u + b·v; transversal to {u=0} iff b != 0
                let across = match d.axis {
                    Axis::U => [0, 1],
                    Axis::V => [1, 0],
                };
                h.coeff_of(&across).is_zero()
            }
            _ => false,
        };
        if !blow {
            return Ok(());
        }
        if self.nodes.len() >= MAX_NODES {
            return Err(LctError::TooManyBlowups);
        }
        if mult >= 2 {
            self.delta += u64::from(mult) * u64::from(mult - 1) / 2;
            if self.delta > self.delta_cap {
                return Err(LctError::NonReduced);
            }
        }
        let id = self.nodes.len();
        let node = Node {
            id,
            strict_mult: mult,
            m: mult + divs.iter().map(|d| self.nodes[d.node].m).sum::<u32>(),
            k: 1 + divs.iter().map(|d| self.nodes[d.node].k).sum::<u32>(),
            e: if divs.is_empty() { 1 } else { divs.iter().map(|d| self.nodes[d.node].e).sum() },
            parents: divs.iter().map(|d| d.node).collect(),
        };
        if let Some(order) = self.order {
            if mult >= 2 && node.m > order {
                return Err(LctError::Truncation { order });
            }
        }
        self.nodes.push(node);

        let cone = BinaryForm::from_germ(&h.taylor_component(mult)?, mult as usize)?;
        for group in cone.root_groups() {
            if group.at_infinity {
                // direction [1:0]: chart v -> u·v, new divisor {u = 0}
                let (strict, _) = blowup_chart(&h, &[0, 1], 0)?;
                let mut nd = vec![Div { node: id, axis: Axis::U }];
                nd.extend(divs.iter().filter(|d| d.axis == Axis::V).copied());
                self.visit(strict, nd)?;
            }
            let roots =
                if group.finite.degree().unwrap_or(0) == 0 { Vec::new() } else { group.finite.rational_roots()? };
            let finite_deg = group.finite.degree().unwrap_or(0);
            if roots.len() < finite_deg && group.mult >= 2 {
                return Err(LctError::IrrationalCenter);
            }
            // simple irrational points meet the new divisor transversally
            for t in roots {
                // direction [t:1]: chart u -> u·v, shift u -> u + t, new divisor {v = 0}
                let (strict, _) = blowup_chart(&h, &[0, 1], 1)?;
                let shifted = if t.is_zero() {
                    strict
                } else {
                    let images = [
                        Germ::var(2, strict.order(), 0).add(&Germ::constant(2, strict.order(), t.clone())),
                        Germ::var(2, strict.order(), 1),
                    ];
                    strict.compose(&images)?
                };
                let mut nd = vec![Div { node: id, axis: Axis::V }];
                if t.is_zero() {
                    nd.extend(divs.iter().filter(|d| d.axis == Axis::U).copied());
                }
                self.visit(shifted, nd)?;
            }
        }
        Ok(())
    }
}

/// Resolution tree of `{g = 0}` at the origin; `g` must be a two-variable
/// germ vanishing there.
pub fn resolve(g: &Germ) -> Result<ResolutionTree, LctError> {
    if g.nvars() != 2 {
        return Err(LctError::WrongVars { expected: 2, got: g.nvars() });
    }
    if g.is_zero() {
        return Err(LctError::ZeroGerm);
    }
    if !g.coeff_of(&[0, 0]).is_zero() {
        return Err(LctError::NotThroughOrigin);
    }
    // resolve the stored polynomial exactly
    let stored = Germ::exact_from_terms(2, g.terms().map(|(m, c)| (m.clone(), c.clone())).collect());
    let d = u64::from(stored.degree().unwrap_or(0));
    let mut r = Resolver {
        nodes: Vec::new(),
        delta: 0,
        delta_cap: d * d.saturating_sub(1) / 2,
        order: g.is_truncated().then(|| g.order()),
    };
    match r.visit(stored, Vec::new()) {
        // the stored part may be non-reduced only because of what was dropped
        Err(LctError::NonReduced) if g.is_truncated() => return Err(LctError::Truncation { order: g.order() }),
        other => other?,
    }
    if let Some(order) = r.order {
        // dropped terms vanish to order >= (order+1)·e along each divisor
        if r.nodes.iter().any(|n| n.m >= (order + 1) * n.e) {
            return Err(LctError::Truncation { order });
        }
    }
    let mut tree = ResolutionTree { nodes: r.nodes, realizing: Vec::new() };
    if let Some(min) = tree.nodes.iter().map(Node::ratio).min() {
        if min < Rat::one() {
            tree.realizing = tree.nodes.iter().filter(|n| n.ratio() == min).map(|n| n.id).collect();
        }
    }
    Ok(tree)
}

/// `lct(C^2, {g = 0})` at the origin, exactly.
pub fn curve_lct(g: &Germ) -> Result<Threshold, LctError> {
    let tree = resolve(g)?;
    let value = tree.nodes.iter().map(Node::ratio).min().map_or(Rat::one(), |m| m.min(Rat::one()));
    Ok(Threshold { value, kind: Kind::Exact, certificate: Certificate::Resolution(tree) })
}

/// Monomial exponent helper for tests and callers building germs by hand.
pub fn binomial(p: u32, q: u32) -> Germ {
    Germ::exact_from_terms(2, vec![(Monomial(vec![p, 0]), Rat::one()), (Monomial(vec![0, q]), Rat::one())])
}
