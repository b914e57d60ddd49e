//! File formats: surface files (.surf), map files (.map) and catalog entry
//! files (.entry). All polynomial values use the shared expression grammar;
//! `#` starts a comment line.
//!
//! Surface files round-trip bit-exactly through the canonical form (over Q:
//! integral coefficients, no shared p^4/p^6 content, written in descending
//! s-powers).

use std::collections::BTreeMap;

use super::{CatalogEntry, EntryMetadata, FieldDef, TwistRecipe};
use crate::error::{Error, Result};
use crate::exactalg::render_poly;
use crate::weier::WeierstrassModel;

pub struct SurfaceFile {
    pub field: FieldDef,
    pub weight: u32,
    pub a: String,
    pub b: String,
}

pub struct MapFile {
    pub field: FieldDef,
    pub degree: u32,
    pub n: String,
    pub d: String,
    pub identity_check: Option<String>,
}

fn parse_kv(text: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| {
            Error::Parse(format!("line {}: expected `key = value`", lineno + 1))
        })?;
        out.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(out)
}

fn field_of(kv: &BTreeMap<String, String>) -> Result<FieldDef> {
    match kv.get("field").map(|s| s.as_str()) {
        None | Some("rationals") => Ok(FieldDef::Rationals),
        Some(v) => {
            if let Some(m) = v.strip_prefix("extension:") {
                Ok(FieldDef::Extension(m.trim().to_string()))
            } else {
                Err(Error::Parse(format!(
                    "field must be `rationals` or `extension: <poly in x>`, got `{v}`"
                )))
            }
        }
    }
}

fn required<'a>(kv: &'a BTreeMap<String, String>, key: &str) -> Result<&'a str> {
    kv.get(key)
        .map(|s| s.as_str())
        .ok_or_else(|| Error::Parse(format!("missing `{key} = ...`")))
}

pub fn parse_surface_file(text: &str) -> Result<SurfaceFile> {
    let kv = parse_kv(text)?;
    let field = field_of(&kv)?;
    let weight: u32 = required(&kv, "M")?
        .parse()
        .map_err(|_| Error::Parse("M must be a positive integer".into()))?;
    let a = required(&kv, "A")?.to_string();
    let b = required(&kv, "B")?.to_string();
    // validate now so bad files fail at load, and check M against degrees
    let spec = field.resolve()?;
    let pa = crate::exactalg::parse_homog(&a, &spec)?;
    let pb = crate::exactalg::parse_homog(&b, &spec)?;
    let m = WeierstrassModel::new(pa, pb)?;
    if m.weight() != weight {
        return Err(Error::Parse(format!(
            "M = {weight} does not match the degrees (expected M = {})",
            m.weight()
        )));
    }
    Ok(SurfaceFile {
        field,
        weight,
        a,
        b,
    })
}

/// Canonical text form of a model; over Q the model is content-canonicalized
/// first so that write/read/write is bit-stable.
pub fn render_surface_file(m: &WeierstrassModel) -> Result<String> {
    let canon = m.canonical_rescaled()?;
    let field_line = if m.spec().is_rationals() {
        "field = rationals".to_string()
    } else {
        format!("field = extension: {}", m.spec().modulus_display())
    };
    Ok(format!(
        "{field_line}\nM = {}\nA = {}\nB = {}\n",
        canon.weight(),
        render_poly(canon.a()),
        render_poly(canon.b()),
    ))
}

pub fn parse_map_file(text: &str) -> Result<MapFile> {
    let kv = parse_kv(text)?;
    let field = field_of(&kv)?;
    let degree: u32 = required(&kv, "degree")?
        .parse()
        .map_err(|_| Error::Parse("degree must be a positive integer".into()))?;
    Ok(MapFile {
        field,
        degree,
        n: required(&kv, "N")?.to_string(),
        d: required(&kv, "D")?.to_string(),
        identity_check: kv.get("identity_check").cloned(),
    })
}

pub fn render_map_file(m: &super::MapDef) -> String {
    let mut out = String::new();
    if let FieldDef::Extension(e) = &m.field {
        out.push_str(&format!("field = extension: {e}\n"));
    }
    out.push_str(&format!("degree = {}\nN = {}\nD = {}\n", m.degree, m.n, m.d));
    if let Some(i) = &m.identity_check {
        out.push_str(&format!("identity_check = {i}\n"));
    }
    out
}

/// Entry file: `entry = <id>; base = <id>; map = <id>; twist = <poly |
/// all-starred | deflate>; expect = <config>` plus optional `pre_mobius =
/// N : D` and `field = ...` lines.
pub fn parse_entry_file(text: &str) -> Result<CatalogEntry> {
    let kv = parse_kv(text)?;
    let id = required(&kv, "entry")?.to_string();
    let base = required(&kv, "base")?.to_string();
    let expect = required(&kv, "expect")?.to_string();
    let field = field_of(&kv)?;
    let twist = match kv.get("twist").map(|s| s.as_str()) {
        None => TwistRecipe::None,
        Some("all-starred") => TwistRecipe::AllStarred,
        Some("deflate") => TwistRecipe::Deflate,
        Some(p) => TwistRecipe::Explicit(p.to_string()),
    };
    let pre_mobius = match kv.get("pre_mobius") {
        None => None,
        Some(v) => {
            let (n, d) = v.split_once(':').ok_or_else(|| {
                Error::Parse("pre_mobius must be written as `N : D`".into())
            })?;
            Some((n.trim().to_string(), d.trim().to_string()))
        }
    };
    Ok(CatalogEntry {
        id,
        field,
        base_surface: base,
        pre_mobius,
        map: kv.get("map").cloned(),
        twist,
        expected_config: expect,
        printed_model: None,
        metadata: EntryMetadata {
            construction: "user-supplied".into(),
            ..Default::default()
        },
        skip: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{parse_homog, FieldSpec};

    #[test]
    fn surface_file_round_trip_is_bit_exact() {
        let q = FieldSpec::rationals();
        let m = WeierstrassModel::new(
            parse_homog("-3*t^2*(s^2-3*t^2)", &q).unwrap(),
            parse_homog("s*t^3*(2*s^2-9*t^2)", &q).unwrap(),
        )
        .unwrap();
        let text = render_surface_file(&m).unwrap();
        let sf = parse_surface_file(&text).unwrap();
        let spec = sf.field.resolve().unwrap();
        let m2 = WeierstrassModel::new(
            parse_homog(&sf.a, &spec).unwrap(),
            parse_homog(&sf.b, &spec).unwrap(),
        )
        .unwrap();
        assert_eq!(render_surface_file(&m2).unwrap(), text);
        assert_eq!(m2, m.canonical_rescaled().unwrap());
    }

    #[test]
    fn surface_file_weight_mismatch_rejected() {
        let bad = "field = rationals\nM = 2\nA = -3*t^2*(s^2-3*t^2)\nB = s*t^3*(2*s^2-9*t^2)\n";
        assert!(parse_surface_file(bad).is_err());
    }

    #[test]
    fn entry_file_parses() {
        let text = "entry = my-k3\nbase = x411\npre_mobius = 4*s-2*t : t\nmap = pi4\n\
                    twist = all-starred\nexpect = [1,1,1,2,3,16]\n";
        let e = parse_entry_file(text).unwrap();
        assert_eq!(e.id, "my-k3");
        assert_eq!(e.base_surface, "x411");
        assert_eq!(e.map.as_deref(), Some("pi4"));
        assert_eq!(e.twist, TwistRecipe::AllStarred);
        assert_eq!(
            e.pre_mobius,
            Some(("4*s-2*t".to_string(), "t".to_string()))
        );
    }
}
