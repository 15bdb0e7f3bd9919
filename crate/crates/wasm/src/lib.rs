//! Browser bindings for the partition toolkit.
//!
//! Three operations back the demo page: applying the merge/split bijection to
//! a partition, rendering an identity as a per-(n, m) value table, and
//! listing the decorated partitions of `n` with their weights. Results come
//! back as JSON strings so the page needs no binding glue beyond `JSON.parse`.
//!
//! Build with `wasm-pack build crates/wasm --target web --out-dir ../../www/pkg`.

use glaisher::{
    check_convolution, check_decorated_weights, check_per_k, check_per_k_first, check_per_k_signed,
    check_poly_full_eval, check_poly_xyz_eval, check_restricted_forms, check_transport,
    check_weighted_sum, check_zsum, decompose_dn, decompose_oe, derive_seed, enumerate_decorated,
    sample_rational_point, sigma, sigma_inv, weight_w, weight_wtilde, Complex64, IdentityReport,
    IdentityTag, PartList, Sign, WeightVariant, ZSumVariant,
};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Largest `n` the in-browser identity table will sweep; keeps every cell
/// under a few hundred milliseconds of enumeration.
const TABLE_N_LIMIT: u64 = 32;
/// Largest `n` the decorated listing will expand in the page.
const DECORATED_N_LIMIT: u64 = 25;

fn err(e: impl std::fmt::Display) -> JsValue {
    JsValue::from(e.to_string())
}

/// Identity tags the table accepts, as a JSON array of strings.
#[wasm_bindgen]
pub fn identity_tags() -> String {
    let labels: Vec<String> = IdentityTag::ALL.iter().map(|t| t.to_string()).collect();
    json!(labels).to_string()
}

fn map_partition_impl(parts: &str, m: u64, inverse: bool) -> Result<String, String> {
    if m < 2 {
        return Err("the bijection needs m of at least 2".into());
    }
    let list: PartList = parts.parse().map_err(|e: glaisher::Error| e.to_string())?;
    let source = list.to_partition();
    let record = if inverse {
        let split = decompose_dn(&list, m).map_err(|e| e.to_string())?;
        let image = sigma_inv(&source, m).map_err(|e| e.to_string())?;
        json!({
            "source": list.to_string(),
            "d_part": split.d_part.to_string(),
            "n_part": split.n_part.to_string(),
            "image": image.to_part_list().to_string(),
        })
    } else {
        let split = decompose_oe(&list, m).map_err(|e| e.to_string())?;
        let image = sigma(&source, m).map_err(|e| e.to_string())?;
        json!({
            "source": list.to_string(),
            "o_part": split.o_part.to_string(),
            "e_part": split.e_part.to_string(),
            "image": image.to_part_list().to_string(),
        })
    };
    Ok(record.to_string())
}

/// Applies the bijection (or its inverse) to a comma-separated part list and
/// returns the source, its split, and the image as a JSON object.
#[wasm_bindgen]
pub fn map_partition(parts: &str, m: u32, inverse: bool) -> Result<String, JsValue> {
    map_partition_impl(parts, m as u64, inverse).map_err(err)
}

fn decorated_table_impl(n: u64) -> Result<String, String> {
    if n > DECORATED_N_LIMIT {
        return Err(format!(
            "keep n at or below {DECORATED_N_LIMIT} for the in-browser listing"
        ));
    }
    let rows: Vec<serde_json::Value> = enumerate_decorated(n)
        .map(|d| {
            json!({
                "parts": d.to_string(),
                "w": weight_w(&d).to_string(),
                "wtilde": weight_wtilde(&d).to_string(),
            })
        })
        .collect();
    Ok(json!(rows).to_string())
}

/// Lists the decorated partitions of `n` with both weights, as a JSON array
/// of `{parts, w, wtilde}` rows in canonical order.
#[wasm_bindgen]
pub fn decorated_table(n: u32) -> Result<String, JsValue> {
    decorated_table_impl(n as u64).map_err(err)
}

fn run_cell(
    tag: IdentityTag,
    n: u64,
    m: u64,
    k: u64,
    sign: Sign,
) -> glaisher::Result<IdentityReport> {
    match tag {
        IdentityTag::PerK => check_per_k(n, m, k),
        IdentityTag::PerKFirst => check_per_k_first(n, m, k),
        IdentityTag::PerKSigned => check_per_k_signed(n, m, k),
        IdentityTag::ZSumFloor => {
            check_zsum(n, m, Complex64::new(0.0, 0.0), sign, ZSumVariant::Floor)
        }
        IdentityTag::ZSumFirst => {
            check_zsum(n, m, Complex64::new(0.0, 0.0), sign, ZSumVariant::First)
        }
        IdentityTag::ZSumSigned => {
            check_zsum(n, m, Complex64::new(0.0, 0.0), sign, ZSumVariant::Signed)
        }
        IdentityTag::BetaSum => check_weighted_sum(n, m, sign, WeightVariant::Beta),
        IdentityTag::GammaSum => check_weighted_sum(n, m, sign, WeightVariant::Gamma),
        IdentityTag::Transport => check_transport(n, m),
        IdentityTag::PolyFull => {
            let seed = derive_seed(0, &[n, m, 0]);
            check_poly_full_eval(n, m, &sample_rational_point(n, seed), Some(seed))
        }
        IdentityTag::PolyXyz => {
            let seed = derive_seed(0, &[n, m, 1]);
            let point = sample_rational_point(2, seed);
            check_poly_xyz_eval(n, m, point.x(1), point.x(2), &point.z)
        }
        IdentityTag::DecoratedWeights => Ok(check_decorated_weights(n)),
        IdentityTag::Restricted => check_restricted_forms(n, m),
        IdentityTag::Convolution => check_convolution(n, m),
    }
}

fn report_json(report: &IdentityReport) -> serde_json::Value {
    let mut row = json!({
        "identity": report.identity.to_string(),
        "n": report.n,
        "m": report.m,
        "lhs": report.lhs.to_string(),
        "rhs": report.rhs.to_string(),
        "verdict": report.verdict.to_string(),
        "residual": report.residual,
    });
    let map = row.as_object_mut().expect("object literal");
    if let Some(k) = report.k {
        map.insert("k".into(), json!(k));
    }
    if let Some(sign) = report.sign {
        map.insert("sign".into(), json!(sign.to_string()));
    }
    if let Some(point) = &report.point {
        map.insert("point".into(), json!(point));
    }
    row
}

fn identity_table_impl(
    tag: &str,
    n_lo: u64,
    n_hi: u64,
    m: u64,
    k: u64,
    sign: &str,
) -> Result<String, String> {
    let tag: IdentityTag = tag
        .trim()
        .parse()
        .map_err(|e: glaisher::Error| e.to_string())?;
    let sign: Sign = sign
        .trim()
        .parse()
        .map_err(|e: glaisher::Error| e.to_string())?;
    if n_lo > n_hi {
        return Err(format!("empty range {n_lo}..{n_hi}"));
    }
    if n_hi > TABLE_N_LIMIT {
        return Err(format!(
            "keep n at or below {TABLE_N_LIMIT} for the in-browser table"
        ));
    }
    if k < 1 {
        return Err("k must be at least 1".into());
    }
    let mut rows = Vec::new();
    for n in n_lo..=n_hi {
        let report = run_cell(tag, n, m, k, sign).map_err(|e| e.to_string())?;
        rows.push(report_json(&report));
    }
    Ok(json!(rows).to_string())
}

/// Evaluates one identity for each `n` in `n_lo..=n_hi` at the given `m`,
/// returning both sides and the verdict per row as a JSON array.
#[wasm_bindgen]
pub fn identity_table(
    tag: &str,
    n_lo: u32,
    n_hi: u32,
    m: u32,
    k: u32,
    sign: &str,
) -> Result<String, JsValue> {
    identity_table_impl(tag, n_lo as u64, n_hi as u64, m as u64, k as u64, sign).map_err(err)
}
