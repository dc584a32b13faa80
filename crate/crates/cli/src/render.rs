use num_bigint::BigInt;
use qtree::qpoly::cyclotomic_factor;
use qtree::{PlaneTree, QPoly};
use serde_json::Value;

/// Largest integer a double holds exactly.
const SAFE: i64 = (1 << 53) - 1;

/// Ascending coefficients; values outside the 53-bit safe range become strings.
pub fn coeffs_json(p: &QPoly) -> Value {
    let safe = BigInt::from(SAFE);
    let coeffs = if p.is_zero() {
        vec![Value::from(0)]
    } else {
        p.coeffs()
            .iter()
            .map(|c| {
                if c.magnitude() <= safe.magnitude() {
                    Value::from(i64::try_from(c).expect("within safe range"))
                } else {
                    Value::from(c.to_string())
                }
            })
            .collect()
    };
    Value::Array(coeffs)
}

pub fn poly_latex(p: &QPoly) -> String {
    p.to_latex()
}

/// `label = expanded [= product] [= cyclotomic factorization]`; the last
/// part only when the factorization is complete and not trivial.
pub fn latex_line(label: &str, p: &QPoly, product: Option<&str>) -> String {
    let mut parts = vec![label.to_string(), p.to_latex()];
    if let Some(prod) = product {
        parts.push(prod.to_string());
    }
    if p.degree().unwrap_or(0) > 0 {
        if let Ok(f) = cyclotomic_factor(p) {
            if f.is_complete() {
                parts.push(f.to_latex());
            }
        }
    }
    parts.join(" = ")
}

/// The state product as q-multinomials, one per vertex with two or more
/// children; `None` when every factor is 1.
pub fn state_product_latex(tree: &PlaneTree) -> Option<String> {
    fn go(t: &PlaneTree, out: &mut Vec<String>) {
        if t.children().len() >= 2 {
            let sizes: Vec<String> = t
                .children()
                .iter()
                .map(|c| (c.edge_count() + 1).to_string())
                .collect();
            out.push(format!(
                "\\binom{{{}}}{{{}}}_q",
                t.edge_count(),
                sizes.join(",")
            ));
        }
        for c in t.children() {
            go(c, out);
        }
    }
    let mut factors = Vec::new();
    go(tree, &mut factors);
    (!factors.is_empty()).then(|| factors.join(" "))
}
