use crate::rings::Ring;
use crate::series::UPoly;
use serde::Serialize;
use std::collections::BTreeMap;

/// The Laurent polynomials `C^r_n(i, j)` on `1 <= i <= n`, `0 <= j <= n - i`.
#[derive(Debug, Clone, PartialEq)]
pub struct CTable {
    pub n: i64,
    pub r: i64,
    entries: BTreeMap<(i64, i64), UPoly>,
}

#[derive(Serialize)]
struct EntryJson {
    i: i64,
    j: i64,
    poly: String,
}

#[derive(Serialize)]
struct CTableJson {
    n: i64,
    r: i64,
    entries: Vec<EntryJson>,
}

impl CTable {
    /// Runs the recursion up from `C^r_1(1, 0) = 1`; anything outside the
    /// triangle, including `i = 0` and `j < 0`, counts as zero.
    pub fn new(n: i64, r: i64) -> Self {
        assert!(n >= 1, "C-table needs n >= 1");
        let mut t = CTable {
            n: 1,
            r,
            entries: BTreeMap::from([((1, 0), UPoly::one())]),
        };
        while t.n < n {
            t = t.step();
        }
        t
    }

    fn step(&self) -> Self {
        let (n, r) = (self.n, self.r);
        let down = UPoly::u_pow(r - n);
        let up = UPoly::u_pow(n - r);
        let mut entries = BTreeMap::new();
        for i in 1..=n + 1 {
            for j in 0..=n + 1 - i {
                let mut c = self.get(i - 1, j).add(&self.get(i + 1, j - 1));
                c.sub_assign(&down.mul(&self.get(i, j - 1)));
                c.sub_assign(&up.mul(&self.get(i, j)));
                if !c.is_zero() {
                    entries.insert((i, j), c);
                }
            }
        }
        CTable {
            n: n + 1,
            r,
            entries,
        }
    }

    pub fn get(&self, i: i64, j: i64) -> UPoly {
        self.entries
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(UPoly::zero)
    }

    /// Nonzero entries in `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = ((i64, i64), &UPoly)> {
        self.entries.iter().map(|(k, v)| (*k, v))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let doc = CTableJson {
            n: self.n,
            r: self.r,
            entries: self
                .entries()
                .map(|((i, j), p)| EntryJson {
                    i,
                    j,
                    poly: p.to_string(),
                })
                .collect(),
        };
        serde_json::to_value(doc).expect("plain data")
    }
}

pub fn c_table(n: i64, r: i64) -> CTable {
    CTable::new(n, r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_two_values() {
        for r in 0..4 {
            let t = c_table(2, r);
            assert_eq!(t.get(2, 0), UPoly::one());
            assert_eq!(t.get(1, 0), UPoly::u_pow(1 - r).neg());
            assert_eq!(t.get(1, 1), UPoly::u_pow(r - 1).neg());
            assert_eq!(t.entries().count(), 3);
        }
    }

    #[test]
    fn rank_three_by_hand() {
        // C_2 = {(2,0): 1, (1,0): -u, (1,1): -u^-1} for r = 0, then one step with
        // u^{r-n} = u^-2, u^{n-r} = u^2.
        let t = c_table(3, 0);
        let p = |s: &str| s.parse::<UPoly>().unwrap();
        assert_eq!(t.get(3, 0), UPoly::one());
        assert_eq!(t.get(2, 0), p("-u-u^2"));
        assert_eq!(t.get(2, 1), p("-u^-1-u^-2"));
        assert_eq!(t.get(1, 0), p("u^3"));
        assert_eq!(t.get(1, 1), p("1+u^-1+u"));
        assert_eq!(t.get(1, 2), p("u^-3"));
    }

    #[test]
    fn json_shape() {
        let v = c_table(1, 0).to_json();
        assert_eq!(
            v.to_string(),
            r#"{"entries":[{"i":1,"j":0,"poly":"1"}],"n":1,"r":0}"#
        );
    }
}
