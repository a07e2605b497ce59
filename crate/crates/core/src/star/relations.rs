use serde::Serialize;

use crate::coset::Coset;
use crate::ring::{Ring, RingElement};

use super::element::AlgebraElement;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub name: String,
    pub checked: usize,
    pub counterexample: Option<String>,
}

impl RelationCheck {
    pub(crate) fn new(name: &str) -> Self {
        RelationCheck { name: name.into(), checked: 0, counterexample: None }
    }

    /// Records one instance; keeps the first failure.
    pub(crate) fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationsReport {
    pub ring: String,
    pub checks: Vec<RelationCheck>,
}

impl RelationsReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(RelationCheck::passed)
    }
}

/// Audits the four defining relations as exact identities:
///
/// 1. `s_k s_m = s_{km}` for all pairs from `ms`;
/// 2. `u^l u^n = u^{l+n}`;
/// 3. `s_m u^n = u^{mn} s_m`;
/// 4. `Σ_{n mod m} u^n e_m u^{-n} = 1`.
///
/// With `ns = None` the shifts `n` run over a full residue system mod each
/// `m` (and `l = m` in 2.); otherwise over the given sample for every `m`.
pub fn verify_defining_relations(ring: &Ring, ms: &[RingElement], ns: Option<&[RingElement]>) -> RelationsReport {
    let mut i = RelationCheck::new("s_k s_m = s_km");
    let mut ii = RelationCheck::new("u^l u^n = u^(l+n)");
    let mut iii = RelationCheck::new("s_m u^n = u^mn s_m");
    let mut iv = RelationCheck::new("sum_n u^n e_m u^-n = 1");
    let s = |m: &RingElement| AlgebraElement::s(ring, m).expect("nonzero sample");
    let u = |n: &RingElement| AlgebraElement::u(ring, n);
    let show = |x: &RingElement| ring.show(x);

    for k in ms {
        for m in ms {
            let ok = &s(k) * &s(m) == s(&ring.mul(k, m));
            i.record(ok, || format!("k = {}, m = {}", show(k), show(m)));
        }
    }
    for m in ms {
        let residues = ring.residues(m).expect("nonzero sample");
        let shifts: &[RingElement] = ns.unwrap_or(&residues);
        let ls: Vec<RingElement> = match ns {
            Some(sample) => sample.to_vec(),
            None => vec![m.clone()],
        };
        for l in &ls {
            for n in shifts {
                let ok = &u(l) * &u(n) == u(&ring.add(l, n));
                ii.record(ok, || format!("l = {}, n = {}", show(l), show(n)));
            }
        }
        for n in shifts {
            let ok = &s(m) * &u(n) == &u(&ring.mul(m, n)) * &s(m);
            iii.record(ok, || format!("m = {}, n = {}", show(m), show(n)));
        }
        let e = AlgebraElement::e(ring, m).expect("nonzero sample");
        let sum = residues
            .iter()
            .fold(AlgebraElement::zero(ring), |acc, n| &acc + &(&(&u(n) * &e) * &u(&ring.neg(n))));
        // the same sum with coset projections directly
        let direct = residues.iter().fold(AlgebraElement::zero(ring), |acc, n| {
            &acc + &AlgebraElement::p(ring, &Coset::new(ring, n.clone(), m.clone()).unwrap())
        });
        let one = AlgebraElement::one(ring);
        iv.record(sum == one && direct == one, || format!("m = {}: sum = {}", show(m), sum.show()));
    }
    RelationsReport { ring: ring.name(), checks: vec![i, ii, iii, iv] }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_samples_pass() {
        let r = Ring::integers();
        let ms = [r.from_i64(2), r.from_i64(3)];
        let ns = [r.from_i64(0), r.from_i64(1), r.from_i64(5)];
        assert!(verify_defining_relations(&r, &ms, Some(&ns)).passed());

        let g = Ring::gaussian();
        assert!(verify_defining_relations(&g, &[g.quad_elem(1, 1)], None).passed());

        let f = Ring::poly_fq(3).unwrap();
        let rep = verify_defining_relations(&f, &[f.generator()], None);
        assert!(rep.passed());
        assert_eq!(rep.checks[3].checked, 1);
    }
}
