use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// `v = (r, d·D_g, a)` where `D_g` is the genus-`g` class, `D_g^2 = 2g - 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MukaiVector {
    pub rank: i64,
    /// Multiple of `D_g` in the middle slot; 1 for the sheaves counted here.
    pub d: i64,
    pub genus: i64,
    pub a: i64,
}

impl MukaiVector {
    /// `(r, D_g, a)`.
    pub fn new(rank: i64, genus: i64, a: i64) -> Self {
        MukaiVector {
            rank,
            d: 1,
            genus,
            a,
        }
    }

    /// `(r, 0, a)` on a surface whose classes have genus `genus`.
    pub fn without_class(rank: i64, genus: i64, a: i64) -> Self {
        MukaiVector {
            rank,
            d: 0,
            genus,
            a,
        }
    }
}

/// `(v, w) = v_1 w_1 - v_0 w_2 - v_2 w_0`.
pub fn mukai_pairing(v: &MukaiVector, w: &MukaiVector) -> i64 {
    assert_eq!(v.genus, w.genus, "vectors live on different surfaces");
    v.d * w.d * (2 * v.genus - 2) - v.rank * w.a - v.a * w.rank
}

/// `2 + (v, v)`; for `d = 1` this is `2(g - r a)`. A negative answer means
/// the moduli space is empty.
pub fn moduli_dim(v: &MukaiVector) -> Result<i64> {
    let dim = 2 + mukai_pairing(v, v);
    if v.d == 1 {
        debug_assert_eq!(dim, 2 * (v.genus - v.rank * v.a));
    }
    if dim < 0 {
        return Err(Error::NegativeDim(dim));
    }
    Ok(dim)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairing_examples() {
        let o = MukaiVector::without_class(1, 0, 1);
        assert_eq!(mukai_pairing(&o, &o), -2);
        let d = MukaiVector {
            rank: 0,
            d: 1,
            genus: 2,
            a: 0,
        };
        assert_eq!(mukai_pairing(&d, &d), 2);
        assert_eq!(
            mukai_pairing(
                &MukaiVector::without_class(1, 0, 0),
                &MukaiVector::without_class(0, 0, 1)
            ),
            -1
        );
    }

    #[test]
    fn dimensions() {
        for a in -3..4 {
            assert_eq!(moduli_dim(&MukaiVector::new(0, 7, a)).unwrap(), 14);
        }
        assert_eq!(moduli_dim(&MukaiVector::new(1, 5, 2)).unwrap(), 6);
        assert_eq!(
            moduli_dim(&MukaiVector::new(1, 0, 1)),
            Err(Error::NegativeDim(-2))
        );
    }
}
