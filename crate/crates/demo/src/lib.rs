//! Browser bindings: each export takes an ideal file as text and returns
//! JSON, or an error message.

use lexcoh::localcoh::{cohomology_ext, cohomology_layers, default_window, ideal_hilbert_series, scm_criteria};
use lexcoh::lex::lex_from_series;
use lexcoh::rigidity::{all_reports, default_options};
use lexcoh::{Ideal, IdealFile, Window};
use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

/// Generator cap for browser input.
const MAX_GENERATORS: usize = 60;

fn parse(text: &str) -> Result<IdealFile, String> {
    let file = IdealFile::parse(text).map_err(|e| e.to_string())?;
    let count = match &file.ideal {
        Ideal::Monomial(m) => m.num_generators(),
        Ideal::Polynomial(p) => p.generators().len(),
    };
    if count > MAX_GENERATORS {
        return Err(format!("{count} generators; the demo accepts at most {MAX_GENERATORS}"));
    }
    Ok(file)
}

/// Hilbert data of `R/I` and the lex-ideal with the same Hilbert function.
pub fn lex_report(text: &str) -> Result<Value, String> {
    let file = parse(text)?;
    let h = ideal_hilbert_series(&file.ideal).map_err(|e| e.to_string())?;
    let (lex, _) = lex_from_series(file.context(), &h).map_err(|e| e.to_string())?;
    Ok(json!({
        "ideal": file.ideal.to_string(),
        "lex": lex.to_string(),
        "series": h.reduced().to_string(),
        "dimension": h.dimension(),
        "multiplicity": h.multiplicity().to_string(),
        "polynomial": h.polynomial().to_string(),
        "values": h.values(0..=8).iter().map(|v| v.to_string()).collect::<Vec<_>>(),
    }))
}

/// The table `h^k(R/I)_j` on `window` (`lo:hi`, empty for the default)
/// and whether `R/I` is sequentially Cohen–Macaulay.
pub fn cohomology_report(text: &str, window: &str, method: &str) -> Result<Value, String> {
    let file = parse(text)?;
    let opts = default_options();
    let w = if window.trim().is_empty() {
        default_window(&file.ideal, &opts).map_err(|e| e.to_string())?
    } else {
        Window::parse(window.trim()).map_err(|e| e.to_string())?
    };
    let table = match method {
        "ext" => cohomology_ext(&file.ideal, w),
        "layers" => match file.ideal.as_monomial() {
            Some(m) => cohomology_layers(m, w),
            None => return Err("the layer method needs a monomial ideal".into()),
        },
        other => return Err(format!("unknown method {other}")),
    }
    .map_err(|e| e.to_string())?;
    let (scm, _) = scm_criteria(&file.ideal, 0, &opts).map_err(|e| e.to_string())?;
    let n = table.nvars();
    Ok(json!({
        "ideal": file.ideal.to_string(),
        "route": table.route().to_string(),
        "degrees": w.degrees().collect::<Vec<_>>(),
        "rows": (0..=n).map(|k| table.row(k).iter().map(|v| v.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "scm": scm,
    }))
}

/// Every applicable equivalence checker on `I`.
pub fn rigidity_report(text: &str) -> Result<Value, String> {
    let file = parse(text)?;
    let reports = all_reports(&file.ideal, &default_options()).map_err(|e| e.to_string())?;
    Ok(json!({
        "ideal": file.ideal.to_string(),
        "reports": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
    }))
}

#[wasm_bindgen]
pub fn lex(text: &str) -> Result<String, String> {
    lex_report(text).map(|v| v.to_string())
}

#[wasm_bindgen]
pub fn cohomology(text: &str, window: &str, method: &str) -> Result<String, String> {
    cohomology_report(text, window, method).map(|v| v.to_string())
}

#[wasm_bindgen]
pub fn rigidity(text: &str) -> Result<String, String> {
    rigidity_report(text).map(|v| v.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_of_a_product() {
        let v = lex_report("ring: n=2\nideal(X1*X2)").unwrap();
        assert_eq!(v["lex"], "ideal(X1^2)");
        assert_eq!(v["values"][3], "2");
    }

    #[test]
    fn cohomology_rows_by_both_methods() {
        for method in ["ext", "layers"] {
            let v = cohomology_report("ring: n=2\nideal(X1*X2)", "-2:1", method).unwrap();
            assert_eq!(v["degrees"], json!([-2, -1, 0, 1]));
            assert_eq!(v["rows"][1], json!(["2", "2", "1", "0"]));
            assert_eq!(v["scm"], true);
        }
    }

    #[test]
    fn skew_lines_report_an_inconsistency() {
        let v = rigidity_report("ring: n=4\nideal(X1*X3, X1*X4, X2*X3, X2*X4)").unwrap();
        let reports = v["reports"].as_array().unwrap();
        assert!(reports.iter().any(|r| r["consistent"] == false));
        assert!(reports.iter().any(|r| r["checker"] == "sat-rigidity" && r["consistent"] == true));
    }

    #[test]
    fn errors_are_messages() {
        assert!(lex_report("ideal(X1)").is_err());
        assert!(cohomology_report("ring: n=2\nideal(X1^2 + X2^2)", "", "layers").is_err());
        assert!(cohomology_report("ring: n=2\nideal(X1)", "", "other").is_err());
    }
}
