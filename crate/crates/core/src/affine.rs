use crate::coset::Coset;
use crate::ring::{Fraction, Ring, RingElement};

/// `r ↦ a*r + b` restricted to `domain`, with `a*domain + b ⊆ R`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialAffineMap {
    pub a: Fraction,
    pub b: Fraction,
    pub domain: Coset,
}

impl PartialAffineMap {
    /// Image of `r`, or `None` outside the domain.
    pub fn apply(&self, ring: &Ring, r: &RingElement) -> Option<RingElement> {
        if !self.domain.contains(ring, r) {
            return None;
        }
        let v = self.a.mul(ring, &Fraction::integer(ring, r.clone())).add(ring, &self.b);
        Some(v.to_integral(ring).expect("partial affine maps are integral on their domain"))
    }

    pub fn show(&self, ring: &Ring) -> String {
        format!(
            "r -> {}*r + {} on {}",
            self.a.show(ring),
            self.b.show(ring),
            self.domain.show(ring)
        )
    }
}
