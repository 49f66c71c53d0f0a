//! JSON file formats for algebras, representations, bilinear maps, and
//! `(F, G, Delta)` data.
//!
//! All scalars travel as exact rational strings (`"p"` or `"p/q"`). Sparse
//! entry lists (brackets, map values) carry only nonzero coefficients and are
//! emitted in a fixed order, so writing the same object twice produces
//! byte-identical text. Parse errors name the offending position.

use crate::algebra::{LieAlgebra, Representation};
use crate::bider::BilinearMap;
use crate::error::{CoreError, Result};
use crate::fgdelta::FgDelta;
use crate::linalg::{format_rational, parse_rational, Matrix, Rational};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SparseEntry {
    i: usize,
    j: usize,
    coeffs: Vec<(usize, String)>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SplitMeta {
    s_dim: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    name: String,
    dim: usize,
    basis: Vec<String>,
    brackets: Vec<SparseEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    split: Option<SplitMeta>,
}

/// An algebra plus the optional Levi-block size recorded in its file.
#[derive(Clone, Debug)]
pub struct ParsedAlgebra {
    pub algebra: LieAlgebra,
    pub s_dim: Option<usize>,
}

fn syntax(e: serde_json::Error) -> CoreError {
    CoreError::Parse(format!("json: {e}"))
}

fn parse_coeff(pos: &str, k: usize, dim: usize, raw: &str) -> Result<(usize, Rational)> {
    if k >= dim {
        return Err(CoreError::Parse(format!(
            "{pos}: coefficient index {k} out of range (dimension {dim})"
        )));
    }
    let value = parse_rational(raw)
        .map_err(|e| CoreError::Parse(format!("{pos}: bad rational {raw:?}: {e}")))?;
    Ok((k, value))
}

/// Serializes an algebra; `s_dim` adds the in-band split marker.
pub fn write_algebra(g: &LieAlgebra, s_dim: Option<usize>) -> String {
    let mut brackets = Vec::new();
    for i in 0..g.dim() {
        for j in i + 1..g.dim() {
            let coeffs: Vec<(usize, String)> = g
                .bracket_basis(i, j)
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k, format_rational(c)))
                .collect();
            if !coeffs.is_empty() {
                brackets.push(SparseEntry { i, j, coeffs });
            }
        }
    }
    let file = AlgebraFile {
        name: g.name().to_string(),
        dim: g.dim(),
        basis: g.basis_names().to_vec(),
        brackets,
        split: s_dim.map(|s_dim| SplitMeta { s_dim }),
    };
    let mut text = serde_json::to_string_pretty(&file).expect("plain data serializes");
    text.push('\n');
    text
}

pub fn read_algebra(text: &str) -> Result<ParsedAlgebra> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(syntax)?;
    if file.basis.len() != file.dim {
        return Err(CoreError::Parse(format!(
            "basis: expected {} labels, got {}",
            file.dim,
            file.basis.len()
        )));
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut brackets = Vec::new();
    for (idx, entry) in file.brackets.iter().enumerate() {
        let pos = format!("brackets[{idx}]");
        if entry.i >= entry.j {
            return Err(CoreError::Parse(format!(
                "{pos}: requires i < j, got i={}, j={}",
                entry.i, entry.j
            )));
        }
        if entry.j >= file.dim {
            return Err(CoreError::Parse(format!(
                "{pos}: index j={} out of range (dimension {})",
                entry.j, file.dim
            )));
        }
        if !seen.insert((entry.i, entry.j)) {
            return Err(CoreError::Parse(format!(
                "{pos}: duplicate pair ({}, {})",
                entry.i, entry.j
            )));
        }
        let mut coeffs = Vec::new();
        for (cidx, (k, raw)) in entry.coeffs.iter().enumerate() {
            coeffs.push(parse_coeff(
                &format!("{pos}.coeffs[{cidx}]"),
                *k,
                file.dim,
                raw,
            )?);
        }
        brackets.push((entry.i, entry.j, coeffs));
    }
    let algebra = LieAlgebra::from_brackets(file.name, file.basis, &brackets)?;
    if let Some(split) = &file.split {
        if split.s_dim > file.dim {
            return Err(CoreError::Parse(format!(
                "split.s_dim: {} exceeds dimension {}",
                split.s_dim, file.dim
            )));
        }
    }
    Ok(ParsedAlgebra { algebra, s_dim: file.split.map(|s| s.s_dim) })
}

/// How a representation file names its algebra: by reference or inline.
#[derive(Clone, Debug)]
pub enum AlgebraRef {
    Name(String),
    Inline(LieAlgebra),
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum AlgebraRefFile {
    Name(String),
    Inline(AlgebraFile),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RepresentationFile {
    algebra: AlgebraRefFile,
    module_dim: usize,
    action: Vec<Vec<Vec<String>>>,
}

fn matrix_to_strings(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| format_rational(m.at(r, c))).collect())
        .collect()
}

fn matrix_from_strings(pos: &str, rows: usize, cols: usize, data: &[Vec<String>]) -> Result<Matrix> {
    if data.len() != rows {
        return Err(CoreError::Parse(format!(
            "{pos}: expected {rows} rows, got {}",
            data.len()
        )));
    }
    let mut out = Matrix::zero(rows, cols);
    for (r, row) in data.iter().enumerate() {
        if row.len() != cols {
            return Err(CoreError::Parse(format!(
                "{pos}[{r}]: expected {cols} entries, got {}",
                row.len()
            )));
        }
        for (c, raw) in row.iter().enumerate() {
            *out.at_mut(r, c) = parse_rational(raw).map_err(|e| {
                CoreError::Parse(format!("{pos}[{r}][{c}]: bad rational {raw:?}: {e}"))
            })?;
        }
    }
    Ok(out)
}

pub fn write_representation(rep: &Representation, algebra: &AlgebraRef) -> String {
    let algebra = match algebra {
        AlgebraRef::Name(n) => AlgebraRefFile::Name(n.clone()),
        AlgebraRef::Inline(g) => {
            let file: AlgebraFile =
                serde_json::from_str(&write_algebra(g, None)).expect("own format");
            AlgebraRefFile::Inline(file)
        }
    };
    let file = RepresentationFile {
        algebra,
        module_dim: rep.module_dim(),
        action: rep.matrices().iter().map(matrix_to_strings).collect(),
    };
    let mut text = serde_json::to_string_pretty(&file).expect("plain data serializes");
    text.push('\n');
    text
}

pub fn read_representation(text: &str) -> Result<(AlgebraRef, Representation)> {
    let file: RepresentationFile = serde_json::from_str(text).map_err(syntax)?;
    let algebra = match file.algebra {
        AlgebraRefFile::Name(n) => AlgebraRef::Name(n),
        AlgebraRefFile::Inline(inline) => {
            let text = serde_json::to_string(&inline).expect("round trip");
            AlgebraRef::Inline(read_algebra(&text)?.algebra)
        }
    };
    let m = file.module_dim;
    let mut action = Vec::new();
    for (l, data) in file.action.iter().enumerate() {
        action.push(matrix_from_strings(&format!("action[{l}]"), m, m, data)?);
    }
    if let AlgebraRef::Inline(g) = &algebra {
        if action.len() != g.dim() {
            return Err(CoreError::Parse(format!(
                "action: expected {} matrices for the inline algebra, got {}",
                g.dim(),
                action.len()
            )));
        }
    }
    Ok((algebra, Representation::new(m, action)?))
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BilinearFile {
    left_dim: usize,
    right_dim: usize,
    module_dim: usize,
    values: Vec<SparseEntry>,
}

pub fn write_bilinear(map: &BilinearMap) -> String {
    let mut values = Vec::new();
    for i in 0..map.left_dim() {
        for j in 0..map.right_dim() {
            let coeffs: Vec<(usize, String)> = map
                .value(i, j)
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k, format_rational(c)))
                .collect();
            if !coeffs.is_empty() {
                values.push(SparseEntry { i, j, coeffs });
            }
        }
    }
    let file = BilinearFile {
        left_dim: map.left_dim(),
        right_dim: map.right_dim(),
        module_dim: map.module_dim(),
        values,
    };
    let mut text = serde_json::to_string_pretty(&file).expect("plain data serializes");
    text.push('\n');
    text
}

pub fn read_bilinear(text: &str) -> Result<BilinearMap> {
    let file: BilinearFile = serde_json::from_str(text).map_err(syntax)?;
    let mut map = BilinearMap::zero(file.left_dim, file.right_dim, file.module_dim);
    let mut seen = std::collections::BTreeSet::new();
    for (idx, entry) in file.values.iter().enumerate() {
        let pos = format!("values[{idx}]");
        if entry.i >= file.left_dim || entry.j >= file.right_dim {
            return Err(CoreError::Parse(format!(
                "{pos}: pair ({}, {}) out of range ({} x {})",
                entry.i, entry.j, file.left_dim, file.right_dim
            )));
        }
        if !seen.insert((entry.i, entry.j)) {
            return Err(CoreError::Parse(format!(
                "{pos}: duplicate pair ({}, {})",
                entry.i, entry.j
            )));
        }
        let mut value = vec![Rational::zero(); file.module_dim];
        for (cidx, (k, raw)) in entry.coeffs.iter().enumerate() {
            let (k, v) =
                parse_coeff(&format!("{pos}.coeffs[{cidx}]"), *k, file.module_dim, raw)?;
            value[k] = v;
        }
        map.set_value(entry.i, entry.j, value);
    }
    Ok(map)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FgDeltaFile {
    s_dim: usize,
    r_dim: usize,
    abelian_radical: bool,
    f: Vec<Vec<String>>,
    g: Vec<Vec<String>>,
    delta: Vec<Vec<Vec<String>>>,
}

pub fn write_fgdelta(data: &FgDelta) -> String {
    let file = FgDeltaFile {
        s_dim: data.s_dim(),
        r_dim: data.r_dim(),
        abelian_radical: data.abelian_radical,
        f: matrix_to_strings(&data.f),
        g: matrix_to_strings(&data.g),
        delta: data.delta.iter().map(matrix_to_strings).collect(),
    };
    let mut text = serde_json::to_string_pretty(&file).expect("plain data serializes");
    text.push('\n');
    text
}

pub fn read_fgdelta(text: &str) -> Result<FgDelta> {
    let file: FgDeltaFile = serde_json::from_str(text).map_err(syntax)?;
    let (s, r) = (file.s_dim, file.r_dim);
    let f = matrix_from_strings("f", r, s, &file.f)?;
    let g = matrix_from_strings("g", r, r, &file.g)?;
    if file.delta.len() != r {
        return Err(CoreError::Parse(format!(
            "delta: expected {r} matrices, got {}",
            file.delta.len()
        )));
    }
    let delta = file
        .delta
        .iter()
        .enumerate()
        .map(|(i, d)| matrix_from_strings(&format!("delta[{i}]"), r, r, d))
        .collect::<Result<Vec<_>>>()?;
    FgDelta::new(f, g, delta, file.abelian_radical)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{delta_recipe_fixture, fixture, sl2, vm};
    use crate::fgdelta::decompose;
    use crate::linalg::rat;

    #[test]
    fn algebra_round_trip_preserves_structure() {
        for name in ["sl2", "aff1", "oscillator", "nonperfect-delta"] {
            let fx = fixture(name).unwrap();
            let s_dim = fx.split().map(|sp| sp.s_dim());
            let text = write_algebra(fx.algebra(), s_dim);
            let parsed = read_algebra(&text).unwrap();
            assert_eq!(parsed.s_dim, s_dim, "{name}");
            assert_eq!(parsed.algebra.dim(), fx.algebra().dim(), "{name}");
            for i in 0..parsed.algebra.dim() {
                assert_eq!(
                    parsed.algebra.ad_basis(i),
                    fx.algebra().ad_basis(i),
                    "{name} ad {i}"
                );
            }
            // Writing the parse emits identical bytes.
            assert_eq!(write_algebra(&parsed.algebra, parsed.s_dim), text, "{name}");
        }
    }

    #[test]
    fn algebra_file_rejects_bad_pairs_with_position() {
        let base = r#"{"name":"x","dim":2,"basis":["a","b"],"brackets":[{"i":1,"j":1,"coeffs":[[0,"1"]]}]}"#;
        let err = read_algebra(base).unwrap_err().to_string();
        assert!(err.contains("brackets[0]"), "{err}");
        assert!(err.contains("i < j"), "{err}");

        let dup = r#"{"name":"x","dim":2,"basis":["a","b"],"brackets":[
            {"i":0,"j":1,"coeffs":[[0,"1"]]},
            {"i":0,"j":1,"coeffs":[[1,"1"]]}]}"#;
        let err = read_algebra(dup).unwrap_err().to_string();
        assert!(err.contains("brackets[1]") && err.contains("duplicate"), "{err}");

        let badrat = r#"{"name":"x","dim":2,"basis":["a","b"],"brackets":[{"i":0,"j":1,"coeffs":[[0,"1.5"]]}]}"#;
        let err = read_algebra(badrat).unwrap_err().to_string();
        assert!(err.contains("coeffs[0]") && err.contains("1.5"), "{err}");

        let short = r#"{"name":"x","dim":3,"basis":["a","b"],"brackets":[]}"#;
        let err = read_algebra(short).unwrap_err().to_string();
        assert!(err.contains("basis"), "{err}");
    }

    #[test]
    fn representation_round_trip_by_name_and_inline() {
        let rep = vm(2).unwrap();
        let text = write_representation(&rep, &AlgebraRef::Name("sl2".into()));
        let (re, parsed) = read_representation(&text).unwrap();
        assert!(matches!(re, AlgebraRef::Name(ref n) if n == "sl2"));
        assert_eq!(parsed.matrices(), rep.matrices());
        assert_eq!(write_representation(&parsed, &re), text);

        let g = sl2();
        let text = write_representation(&rep, &AlgebraRef::Inline(g.clone()));
        let (re, parsed) = read_representation(&text).unwrap();
        match &re {
            AlgebraRef::Inline(inner) => assert_eq!(inner.dim(), 3),
            AlgebraRef::Name(_) => panic!("expected inline"),
        }
        assert_eq!(parsed.matrices(), rep.matrices());
        parsed.validate(&g).unwrap();
    }

    #[test]
    fn representation_rejects_ragged_action() {
        let text = r#"{"algebra":"sl2","module_dim":2,"action":[[["1","0"],["0","1"]],[["1","0"]],[["0","0"],["0","0"]]]}"#;
        let err = read_representation(text).unwrap_err().to_string();
        assert!(err.contains("action[1]"), "{err}");
    }

    #[test]
    fn bilinear_round_trip() {
        let (_, product) = delta_recipe_fixture();
        let text = write_bilinear(&product);
        let parsed = read_bilinear(&text).unwrap();
        assert_eq!(parsed, product);
        assert_eq!(write_bilinear(&parsed), text);
        // The only nonzero value is z1 o z1 = z2.
        assert_eq!(parsed.value(5, 5)[6], rat(1));
    }

    #[test]
    fn bilinear_rejects_out_of_range_and_duplicates() {
        let text = r#"{"left_dim":2,"right_dim":2,"module_dim":1,"values":[{"i":2,"j":0,"coeffs":[[0,"1"]]}]}"#;
        let err = read_bilinear(text).unwrap_err().to_string();
        assert!(err.contains("values[0]") && err.contains("out of range"), "{err}");

        let text = r#"{"left_dim":2,"right_dim":2,"module_dim":1,"values":[
            {"i":0,"j":0,"coeffs":[[0,"1"]]},
            {"i":0,"j":0,"coeffs":[[0,"2"]]}]}"#;
        let err = read_bilinear(text).unwrap_err().to_string();
        assert!(err.contains("duplicate"), "{err}");
    }

    #[test]
    fn fgdelta_round_trip() {
        let (sp, product) = delta_recipe_fixture();
        let data = decompose(&sp, &product).unwrap();
        let text = write_fgdelta(&data);
        let parsed = read_fgdelta(&text).unwrap();
        assert_eq!(parsed, data);
        assert_eq!(write_fgdelta(&parsed), text);
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let text = r#"{"name":"x","dim":1,"basis":["a"],"brackets":[],"color":"blue"}"#;
        assert!(read_algebra(text).is_err());
    }
}
