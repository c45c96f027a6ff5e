use super::{QSeries, EXACT};
use crate::rings::Ring;
use serde::{Deserialize, Serialize};

/// Canonical JSON form of a q-series: coefficients are exact strings, dense
/// from `lower` to `order - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub var: String,
    pub lower: i64,
    pub order: i64,
    pub coeffs: Vec<String>,
}

/// An exact series reports the order just past its last stored term.
pub fn series_json<C: Ring>(f: &QSeries<C>, var: &str) -> SeriesJson {
    let dense = f.dense();
    let order = if f.order() == EXACT {
        f.lower() + dense.len() as i64
    } else {
        f.order()
    };
    SeriesJson {
        var: var.to_string(),
        lower: f.lower(),
        order,
        coeffs: dense.iter().map(|c| c.to_string()).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn canonical_form() {
        let f = QSeries::new(-1, 2, vec![BigInt::from(1), BigInt::from(24)]);
        let j = serde_json::to_string(&series_json(&f, "q")).unwrap();
        assert_eq!(
            j,
            r#"{"var":"q","lower":-1,"order":2,"coeffs":["1","24","0"]}"#
        );
    }
}
