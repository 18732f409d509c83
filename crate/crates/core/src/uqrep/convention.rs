//! Hopf structure conventions and the globally published choice.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::index::{Generator, SuperIndex, UElement};
use super::RepError;
use crate::linalg::Parity;
use crate::scalars::Q;

/// Which tensor factor carries the Cartan dressing in a coproduct.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

/// One member of the calibration family.
///
/// With `k_b = K_b K_{b+1}^{-1}`:
/// raising `Right` means `Δ(E) = E⊗k + 1⊗E`, `Left` means `Δ(E) = E⊗1 + k⊗E`;
/// lowering uses `k^{-1}` the same way. `orientation` is the exponent `o` in
/// `K_a v_a = q_a^o v_a` on the vector module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Convention {
    pub raising: Side,
    pub lowering: Side,
    pub orientation: i8,
}

/// The declared family, in order.
pub const FAMILY: [Convention; 8] = {
    use Side::*;
    [
        Convention { raising: Left, lowering: Left, orientation: 1 },
        Convention { raising: Left, lowering: Left, orientation: -1 },
        Convention { raising: Left, lowering: Right, orientation: 1 },
        Convention { raising: Left, lowering: Right, orientation: -1 },
        Convention { raising: Right, lowering: Left, orientation: 1 },
        Convention { raising: Right, lowering: Left, orientation: -1 },
        Convention { raising: Right, lowering: Right, orientation: 1 },
        Convention { raising: Right, lowering: Right, orientation: -1 },
    ]
};

/// A tensor of two words: `c · x ⊗ y`.
pub type CoproductTerm = (Q, Vec<Generator>, Vec<Generator>);

/// `k_b^{e}` as a word.
pub fn k_word(b: usize, e: i64) -> Vec<Generator> {
    if e > 0 {
        vec![Generator::K(b), Generator::Kinv(b + 1)]
    } else {
        vec![Generator::Kinv(b), Generator::K(b + 1)]
    }
}

fn invert_word(w: &[Generator]) -> Vec<Generator> {
    w.iter().rev().map(|g| g.inverse_cartan().expect("cartan word")).collect()
}

impl Convention {
    fn dressing(&self, g: Generator) -> Option<(Side, Vec<Generator>)> {
        match g {
            Generator::E(b) => Some((self.raising, k_word(b, 1))),
            Generator::F(b) => Some((self.lowering, k_word(b, -1))),
            _ => None,
        }
    }

    pub fn coproduct(&self, g: Generator) -> Vec<CoproductTerm> {
        match self.dressing(g) {
            None => vec![(Q::one(), vec![g], vec![g])],
            Some((Side::Right, k)) => vec![(Q::one(), vec![g], k), (Q::one(), vec![], vec![g])],
            Some((Side::Left, k)) => vec![(Q::one(), vec![g], vec![]), (Q::one(), k, vec![g])],
        }
    }

    pub fn antipode(&self, g: Generator) -> UElement {
        match self.dressing(g) {
            None => UElement::generator(g.inverse_cartan().unwrap()),
            Some((Side::Right, k)) => {
                let mut w = vec![g];
                w.extend(invert_word(&k));
                UElement::signed_word(-1, w)
            }
            Some((Side::Left, k)) => {
                let mut w = invert_word(&k);
                w.push(g);
                UElement::signed_word(-1, w)
            }
        }
    }

    pub fn antipode_inverse(&self, g: Generator) -> UElement {
        match self.dressing(g) {
            None => UElement::generator(g.inverse_cartan().unwrap()),
            Some((Side::Right, k)) => {
                let mut w = invert_word(&k);
                w.push(g);
                UElement::signed_word(-1, w)
            }
            Some((Side::Left, k)) => {
                let mut w = vec![g];
                w.extend(invert_word(&k));
                UElement::signed_word(-1, w)
            }
        }
    }

    /// Graded-opposite coproduct `τΔ`.
    pub fn opposite_coproduct(&self, g: Generator, idx: &SuperIndex) -> Vec<CoproductTerm> {
        self.coproduct(g)
            .into_iter()
            .map(|(c, x, y)| {
                let s = word_parity(&x, idx) & word_parity(&y, idx);
                let c = if s == 1 { -c } else { c };
                (c, y, x)
            })
            .collect()
    }
}

/// `Δ` of a word, multiplying factor coproducts with the graded rule
/// `(a⊗b)(c⊗d) = (-1)^{[b][c]} ac⊗bd`.
pub fn coproduct_word(conv: &Convention, w: &[Generator], idx: &SuperIndex) -> Vec<CoproductTerm> {
    let mut acc: Vec<CoproductTerm> = vec![(Q::one(), Vec::new(), Vec::new())];
    for &g in w {
        let mut next = Vec::new();
        for (c1, a, b) in &acc {
            for (c2, x, y) in conv.coproduct(g) {
                let mut c = c1 * &c2;
                if word_parity(b, idx) & word_parity(&x, idx) == 1 {
                    c = -c;
                }
                let mut ax = a.clone();
                ax.extend(x);
                let mut by = b.clone();
                by.extend(y);
                next.push((c, ax, by));
            }
        }
        acc = next;
    }
    acc
}

/// `S^{-1}` of a word as a graded anti-homomorphism:
/// `S^{-1}(xy) = (-1)^{[x][y]} S^{-1}(y) S^{-1}(x)`.
pub fn antipode_inverse_word(conv: &Convention, w: &[Generator], idx: &SuperIndex) -> UElement {
    let mut acc = UElement::word(Vec::new());
    let mut seen: Parity = 0;
    for &g in w {
        // acc = S^{-1}(prefix); new = (-1)^{[prefix][g]} S^{-1}(g) acc
        let sg = conv.antipode_inverse(g);
        let flip = seen & g.parity(idx) == 1;
        let mut terms = Vec::new();
        for (c1, x) in &sg.terms {
            for (c2, y) in &acc.terms {
                let mut c = c1 * c2;
                if flip {
                    c = -c;
                }
                let mut xy = x.clone();
                xy.extend(y.iter().copied());
                terms.push((c, xy));
            }
        }
        acc = UElement { terms };
        seen ^= g.parity(idx);
    }
    acc
}

pub fn word_parity(w: &[Generator], idx: &SuperIndex) -> Parity {
    w.iter().fold(0, |acc, g| acc ^ g.parity(idx))
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |s: Side| if s == Side::Left { "L" } else { "R" };
        write!(
            f,
            "raising={} lowering={} orientation={:+}",
            side(self.raising),
            side(self.lowering),
            self.orientation
        )
    }
}

static GLOBAL: OnceLock<Convention> = OnceLock::new();

/// The published convention, if calibration has run.
pub fn global() -> Result<Convention, RepError> {
    GLOBAL.get().copied().ok_or(RepError::NotCalibrated)
}

/// Publish the convention. Later calls must agree with the first.
pub fn publish(c: Convention) -> Result<(), RepError> {
    let stored = *GLOBAL.get_or_init(|| c);
    if stored == c {
        Ok(())
    } else {
        Err(RepError::ConventionConflict)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_is_distinct() {
        for (i, a) in FAMILY.iter().enumerate() {
            for b in &FAMILY[i + 1..] {
                assert_ne!(a, b);
            }
        }
    }

    #[test]
    fn antipode_words() {
        let c = Convention { raising: Side::Right, lowering: Side::Left, orientation: 1 };
        let s = c.antipode(Generator::E(0));
        assert_eq!(s.terms[0].1, vec![Generator::E(0), Generator::K(1), Generator::Kinv(0)]);
        let s = c.antipode(Generator::F(0));
        assert_eq!(s.terms[0].1, vec![Generator::Kinv(1), Generator::K(0), Generator::F(0)]);
        let s = c.antipode_inverse(Generator::E(0));
        assert_eq!(s.terms[0].1, vec![Generator::K(1), Generator::Kinv(0), Generator::E(0)]);
    }
}
