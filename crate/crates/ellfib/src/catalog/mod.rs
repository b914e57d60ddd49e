//! The embedded catalog of elliptic-fibration constructions and the
//! verification harness that recomputes each entry from its base surface and
//! base change.
//!
//! Printed target equations are cross-checks, never sources: the pipeline
//! (pre-Moebius -> pullback -> twist/deflate -> minimalize -> classify) is
//! recomputed from scratch on every run, and where the source text carries a
//! typo the recomputed value is stored with a note saying so.

pub mod data;
mod formats;

pub use formats::{parse_entry_file, parse_map_file, parse_surface_file, render_surface_file};

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use crate::covers::{compose, pullback, RationalMap};
use crate::error::{Error, Result};
use crate::exactalg::{
    content_normalize, hp_gcd, parse_field_elem, parse_homog, parse_modulus, Field, FieldElem,
    FieldSpec, HomogPoly,
};
use crate::fibers::{additive_clusters, classify_fibers, configuration, twist_toggle, Configuration, KodairaType};
use crate::weier::{models_equivalent, WeierstrassModel};

pub use data::{FieldTag, TwistData};

/// Coefficient field of a catalog item, as data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldDef {
    Rationals,
    /// Modulus text, univariate in x.
    Extension(String),
}

impl FieldDef {
    pub fn from_tag(tag: FieldTag) -> FieldDef {
        match tag.modulus() {
            None => FieldDef::Rationals,
            Some(m) => FieldDef::Extension(m.to_string()),
        }
    }

    pub fn resolve(&self) -> Result<Field> {
        match self {
            FieldDef::Rationals => Ok(FieldSpec::rationals()),
            FieldDef::Extension(m) => FieldSpec::extension(parse_modulus(m)?, m.clone()),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SurfaceDef {
    pub id: String,
    pub field: FieldDef,
    pub a: String,
    pub b: String,
    pub note: String,
}

#[derive(Debug, Clone)]
pub struct MapDef {
    pub id: String,
    pub field: FieldDef,
    pub degree: u32,
    pub n: String,
    pub d: String,
    /// Factored form of N - D, verified exactly on load and per run.
    pub identity_check: Option<String>,
    pub erratum: Option<String>,
}

/// Twist recipe of an entry.
#[derive(Debug, Clone, PartialEq)]
pub enum TwistRecipe {
    None,
    /// Twist by the product of every starred cluster place.
    AllStarred,
    /// Twist by the product of the I0* cluster places.
    Deflate,
    /// Deflate the I0* clusters and star the fiber at the named place.
    DeflateAndStar(String),
    /// Move the * from one named place to another.
    Transfer { from: String, to: String },
    /// Twist by exactly this polynomial.
    Explicit(String),
}

impl TwistRecipe {
    fn from_data(d: &TwistData) -> TwistRecipe {
        match d {
            TwistData::None => TwistRecipe::None,
            TwistData::Deflate => TwistRecipe::Deflate,
            TwistData::DeflateAndStar(p) => TwistRecipe::DeflateAndStar((*p).to_string()),
            TwistData::Transfer { from, to } => TwistRecipe::Transfer {
                from: (*from).to_string(),
                to: (*to).to_string(),
            },
            TwistData::Explicit(p) => TwistRecipe::Explicit((*p).to_string()),
        }
    }
}

/// Printed target model plus the recorded normalization (base-coordinate
/// rescale and constant twist) relating the pipeline output to it.
#[derive(Debug, Clone)]
pub struct PrintedModel {
    pub a: String,
    pub b: String,
    pub rho: String,
    pub const_twist: String,
    pub erratum: Option<String>,
}

/// Display-only provenance data; never enters the pass criteria.
#[derive(Debug, Clone, Default)]
pub struct EntryMetadata {
    pub mw: Option<String>,
    pub intersection_form: Option<String>,
    pub sz_number: Option<u32>,
    pub construction: String,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub id: String,
    pub field: FieldDef,
    pub base_surface: String,
    pub pre_mobius: Option<(String, String)>,
    pub map: Option<String>,
    pub twist: TwistRecipe,
    pub expected_config: String,
    pub printed_model: Option<PrintedModel>,
    pub metadata: EntryMetadata,
    pub skip: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Status {
    Pass,
    ConfigMismatch,
    EquationMismatch,
    Skipped(String),
    CatalogCorrupt(String),
}

impl Status {
    pub fn is_failure(&self) -> bool {
        matches!(
            self,
            Status::ConfigMismatch | Status::EquationMismatch | Status::CatalogCorrupt(_)
        )
    }

    pub fn label(&self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::ConfigMismatch => "CONFIG_MISMATCH",
            Status::EquationMismatch => "EQUATION_MISMATCH",
            Status::Skipped(_) => "SKIPPED",
            Status::CatalogCorrupt(_) => "CATALOG_CORRUPT",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Skipped(r) => write!(f, "SKIPPED({r})"),
            Status::CatalogCorrupt(r) => write!(f, "CATALOG_CORRUPT({r})"),
            other => write!(f, "{}", other.label()),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ReportRow {
    pub id: String,
    pub status: Status,
    pub expected_config: String,
    pub computed_config: Option<String>,
    pub euler: Option<u32>,
    pub equation_checked: bool,
    pub notes: Vec<String>,
    pub millis: u128,
}

/// Verification row plus the independent cross-checks of one entry.
#[derive(Debug, Clone)]
pub struct EntryAnalysis {
    pub row: ReportRow,
    /// Fiber-by-fiber prediction equals the computed configuration.
    pub prediction_matches: Option<bool>,
    /// j of the pullback equals j of the base composed with the base change.
    pub j_composition_holds: Option<bool>,
    /// Euler number 24, six cusps, all fibers semi-stable.
    pub semistable_extremal: Option<bool>,
}

#[derive(Debug, Clone, Default)]
pub struct VerificationReport {
    pub rows: Vec<ReportRow>,
}

impl VerificationReport {
    pub fn passed(&self) -> usize {
        self.rows.iter().filter(|r| r.status == Status::Pass).count()
    }

    pub fn skipped(&self) -> usize {
        self.rows
            .iter()
            .filter(|r| matches!(r.status, Status::Skipped(_)))
            .count()
    }

    pub fn failed(&self) -> usize {
        self.rows.iter().filter(|r| r.status.is_failure()).count()
    }

    pub fn has_failures(&self) -> bool {
        self.failed() > 0
    }

    pub fn render_table(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            let cfg = r.computed_config.as_deref().unwrap_or("-");
            let mut line = format!(
                "{:<14} {:<20} computed {:<24} expected {:<24}",
                r.id,
                r.status.to_string(),
                cfg,
                r.expected_config
            );
            if !r.notes.is_empty() {
                line.push_str(&format!(" [{}]", r.notes.join("; ")));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out.push_str(&format!(
            "summary: {} PASS, {} SKIPPED, {} FAIL of {} entries\n",
            self.passed(),
            self.skipped(),
            self.failed(),
            self.rows.len()
        ));
        out
    }

    pub fn render_jsonl(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            let v = serde_json::json!({
                "id": r.id,
                "status": r.status.label(),
                "status_detail": r.status.to_string(),
                "expected": r.expected_config,
                "computed": r.computed_config,
                "euler": r.euler,
                "equation_checked": r.equation_checked,
                "notes": r.notes,
                "millis": r.millis,
            });
            out.push_str(&v.to_string());
            out.push('\n');
        }
        out
    }
}

/// The loaded catalog: surfaces, maps and entries by id.
#[derive(Debug, Clone, Default)]
pub struct Catalog {
    pub surfaces: BTreeMap<String, SurfaceDef>,
    pub maps: BTreeMap<String, MapDef>,
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    /// Load the embedded catalog, validating every map identity.
    pub fn load_builtin() -> Result<Catalog> {
        let mut cat = Catalog::default();
        for s in data::SURFACES {
            cat.surfaces.insert(
                s.id.to_string(),
                SurfaceDef {
                    id: s.id.to_string(),
                    field: FieldDef::from_tag(s.field),
                    a: s.a.to_string(),
                    b: s.b.to_string(),
                    note: s.note.to_string(),
                },
            );
        }
        for m in data::MAPS {
            cat.maps.insert(
                m.id.to_string(),
                MapDef {
                    id: m.id.to_string(),
                    field: FieldDef::from_tag(m.field),
                    degree: m.degree,
                    n: m.n.to_string(),
                    d: m.d.to_string(),
                    identity_check: m.identity_check.map(|s| s.to_string()),
                    erratum: m.erratum.map(|s| s.to_string()),
                },
            );
        }
        for e in data::ENTRIES {
            cat.entries.push(CatalogEntry {
                id: e.id.to_string(),
                field: FieldDef::from_tag(e.field),
                base_surface: e.base.to_string(),
                pre_mobius: e.pre_mobius.map(|(n, d)| (n.to_string(), d.to_string())),
                map: e.map.map(|s| s.to_string()),
                twist: TwistRecipe::from_data(&e.twist),
                expected_config: e.expect.to_string(),
                printed_model: e.printed.as_ref().map(|p| PrintedModel {
                    a: p.a.to_string(),
                    b: p.b.to_string(),
                    rho: p.rho.to_string(),
                    const_twist: p.const_twist.to_string(),
                    erratum: p.erratum.map(|s| s.to_string()),
                }),
                metadata: EntryMetadata {
                    mw: e.mw.map(|s| s.to_string()),
                    intersection_form: e.intersection_form.map(|s| s.to_string()),
                    sz_number: e.sz_number,
                    construction: e.construction.to_string(),
                },
                skip: e.skip.map(|s| s.to_string()),
            });
        }
        for m in cat.maps.values() {
            cat.validate_map(m)
                .map_err(|err| Error::CatalogCorrupt(format!("map {}: {err}", m.id)))?;
        }
        Ok(cat)
    }

    /// Merge user-supplied `.surf`, `.map` and `.entry` files from a
    /// directory. Surface and map ids come from file stems; user items
    /// override builtin ones with the same id.
    pub fn load_extension_dir(&mut self, dir: &Path) -> Result<Vec<String>> {
        let mut loaded = Vec::new();
        let mut files: Vec<_> = std::fs::read_dir(dir)?.collect::<std::io::Result<_>>()?;
        files.sort_by_key(|e| e.file_name());
        for f in files {
            let path = f.path();
            let stem = path
                .file_stem()
                .and_then(|s| s.to_str())
                .unwrap_or("")
                .to_string();
            let ext = path.extension().and_then(|s| s.to_str()).unwrap_or("");
            if !matches!(ext, "surf" | "map" | "entry") {
                continue;
            }
            let text = std::fs::read_to_string(&path)?;
            match ext {
                "surf" => {
                    let sf = formats::parse_surface_file(&text)?;
                    self.surfaces.insert(
                        stem.clone(),
                        SurfaceDef {
                            id: stem.clone(),
                            field: sf.field,
                            a: sf.a,
                            b: sf.b,
                            note: "user-supplied".into(),
                        },
                    );
                    loaded.push(format!("surface {stem}"));
                }
                "map" => {
                    let mf = formats::parse_map_file(&text)?;
                    let def = MapDef {
                        id: stem.clone(),
                        field: mf.field,
                        degree: mf.degree,
                        n: mf.n,
                        d: mf.d,
                        identity_check: mf.identity_check,
                        erratum: None,
                    };
                    self.validate_map(&def)
                        .map_err(|e| Error::CatalogCorrupt(format!("map {stem}: {e}")))?;
                    self.maps.insert(stem.clone(), def);
                    loaded.push(format!("map {stem}"));
                }
                "entry" => {
                    let e = formats::parse_entry_file(&text)?;
                    self.entries.retain(|x| x.id != e.id);
                    self.entries.push(e);
                    loaded.push(format!("entry {stem}"));
                }
                _ => unreachable!(),
            }
        }
        Ok(loaded)
    }

    /// Check a map's declared degree and identity factorization.
    fn validate_map(&self, m: &MapDef) -> Result<()> {
        let spec = m.field.resolve()?;
        let n = parse_homog(&m.n, &spec)?;
        let d = parse_homog(&m.d, &spec)?;
        let map = RationalMap::new(n.clone(), d.clone())?;
        if map.degree() != m.degree {
            return Err(Error::DegreeMismatch {
                expected: m.degree as usize,
                found: map.degree() as usize,
            });
        }
        if let Some(ident) = &m.identity_check {
            let rhs = parse_homog(ident, &spec)?;
            if n.sub(&d) != rhs {
                return Err(Error::CatalogCorrupt(format!(
                    "identity check fails: N - D != {ident}"
                )));
            }
        }
        Ok(())
    }

    pub fn entry(&self, id: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    /// Build a surface model over the given field (coefficient inclusion for
    /// Q-surfaces used in extension-field entries).
    pub fn build_surface(&self, id: &str, spec: &Field) -> Result<WeierstrassModel> {
        let def = self
            .surfaces
            .get(id)
            .ok_or_else(|| Error::CatalogCorrupt(format!("missing surface {id}")))?;
        let a = parse_homog(&def.a, spec)?;
        let b = parse_homog(&def.b, spec)?;
        Ok(WeierstrassModel::new(a, b)?.minimalize()?.0)
    }

    pub fn build_map(&self, id: &str, spec: &Field) -> Result<RationalMap> {
        let def = self
            .maps
            .get(id)
            .ok_or_else(|| Error::CatalogCorrupt(format!("missing map {id}")))?;
        let n = parse_homog(&def.n, spec)?;
        let d = parse_homog(&def.d, spec)?;
        if let Some(ident) = &def.identity_check {
            let rhs = parse_homog(ident, spec)?;
            if n.sub(&d) != rhs {
                return Err(Error::CatalogCorrupt(format!(
                    "map {id}: identity check fails"
                )));
            }
        }
        RationalMap::new(n, d)
    }

    fn twist_polynomial(
        &self,
        model: &WeierstrassModel,
        recipe: &TwistRecipe,
        spec: &Field,
    ) -> Result<Option<HomogPoly>> {
        let alpha = match recipe {
            TwistRecipe::None => return Ok(None),
            TwistRecipe::Explicit(p) => parse_homog(p, spec)?,
            TwistRecipe::Transfer { from, to } => {
                let f = parse_homog(from, spec)?;
                let t = parse_homog(to, spec)?;
                let clusters = additive_clusters(model)?;
                let starred = clusters
                    .iter()
                    .any(|c| c.ktype.is_starred() && f.divides(&c.place));
                if !starred {
                    return Err(Error::NotStarred);
                }
                content_normalize(&f.mul(&t))?.1
            }
            TwistRecipe::AllStarred | TwistRecipe::Deflate | TwistRecipe::DeflateAndStar(_) => {
                let clusters = additive_clusters(model)?;
                let mut alpha = match recipe {
                    TwistRecipe::DeflateAndStar(target) => parse_homog(target, spec)?,
                    _ => HomogPoly::one(spec),
                };
                for c in &clusters {
                    let include = match recipe {
                        TwistRecipe::AllStarred => c.ktype.is_starred(),
                        _ => c.ktype == KodairaType::IStar(0),
                    };
                    if include {
                        alpha = alpha.mul(&c.place);
                    }
                }
                if alpha.is_constant() {
                    return Ok(None);
                }
                content_normalize(&alpha)?.1
            }
        };
        Ok(Some(alpha))
    }

    /// Run an entry's pipeline: pre-Moebius, pullback, twist, minimalize.
    pub fn compute_entry_model(&self, e: &CatalogEntry) -> Result<WeierstrassModel> {
        let spec = e.field.resolve()?;
        let mut model = self.build_surface(&e.base_surface, &spec)?;
        if let Some((n, d)) = &e.pre_mobius {
            let m = RationalMap::new(parse_homog(n, &spec)?, parse_homog(d, &spec)?)?;
            model = pullback(&model, &m)?;
        }
        if let Some(map_id) = &e.map {
            let map = self.build_map(map_id, &spec)?;
            model = pullback(&model, &map)?;
        }
        if let Some(alpha) = self.twist_polynomial(&model, &e.twist, &spec)? {
            model = model.quadratic_twist(&alpha)?;
        }
        Ok(model)
    }

    /// The effective base change of an entry: pre-Moebius composed with the
    /// map, if any.
    pub fn effective_map(&self, e: &CatalogEntry) -> Result<Option<RationalMap>> {
        let spec = e.field.resolve()?;
        let mob = match &e.pre_mobius {
            Some((n, d)) => Some(RationalMap::new(
                parse_homog(n, &spec)?,
                parse_homog(d, &spec)?,
            )?),
            None => None,
        };
        let map = match &e.map {
            Some(id) => Some(self.build_map(id, &spec)?),
            None => None,
        };
        Ok(match (mob, map) {
            (None, None) => None,
            (Some(m), None) => Some(m),
            (None, Some(p)) => Some(p),
            (Some(m), Some(p)) => Some(compose(&m, &p)?),
        })
    }

    /// Verify one entry; failures become report rows, never errors.
    pub fn verify_entry(&self, e: &CatalogEntry) -> ReportRow {
        let start = Instant::now();
        let mut row = ReportRow {
            id: e.id.clone(),
            status: Status::Pass,
            expected_config: e.expected_config.clone(),
            computed_config: None,
            euler: None,
            equation_checked: false,
            notes: Vec::new(),
            millis: 0,
        };
        if let Some(reason) = &e.skip {
            row.status = Status::Skipped(reason.clone());
        } else if !self.surfaces.contains_key(&e.base_surface) {
            row.status = Status::Skipped(format!("missing-base-surface:{}", e.base_surface));
        } else if e
            .map
            .as_deref()
            .map_or(false, |m| !self.maps.contains_key(m))
        {
            row.status = Status::Skipped(format!("missing-map:{}", e.map.as_deref().unwrap()));
        } else if let Err(err) = self.verify_entry_inner(e, &mut row) {
            row.status = Status::CatalogCorrupt(err.to_string());
        }
        row.millis = start.elapsed().as_millis();
        row
    }

    fn verify_entry_inner(&self, e: &CatalogEntry, row: &mut ReportRow) -> Result<()> {
        let spec = e.field.resolve()?;
        let model = self.compute_entry_model(e)?;
        let computed = configuration(&model)?;
        row.computed_config = Some(computed.to_string());
        row.euler = Some(model.euler_number()?);
        let expected = Configuration::from_str(&e.expected_config)?;
        if computed != expected {
            row.status = Status::ConfigMismatch;
            return Ok(());
        }
        if let Some(pm) = &e.printed_model {
            row.equation_checked = true;
            let printed =
                WeierstrassModel::new(parse_homog(&pm.a, &spec)?, parse_homog(&pm.b, &spec)?)?;
            let normalized = self.apply_printed_normalization(&model, pm, &spec)?;
            if !models_equivalent(&normalized, &printed) {
                row.status = Status::EquationMismatch;
                return Ok(());
            }
            let mut note = String::from("printed equation matches");
            if pm.rho != "1" || pm.const_twist != "1" {
                note.push_str(&format!(
                    " after recorded normalization (rho={}, c={})",
                    pm.rho, pm.const_twist
                ));
            }
            row.notes.push(note);
            if let Some(err) = &pm.erratum {
                row.notes.push(format!("erratum: {err}"));
            }
        }
        if let Some(map_id) = &e.map {
            if let Some(err) = self.maps.get(map_id).and_then(|m| m.erratum.clone()) {
                row.notes.push(format!("map erratum: {err}"));
            }
        }
        Ok(())
    }

    fn apply_printed_normalization(
        &self,
        model: &WeierstrassModel,
        pm: &PrintedModel,
        spec: &Field,
    ) -> Result<WeierstrassModel> {
        let mut out = model.clone();
        let rho = parse_field_elem(&pm.rho, spec)?;
        if !rho.is_one() {
            let g = RationalMap::new(HomogPoly::var_s(spec), HomogPoly::var_t(spec).scale(&rho))?;
            out = pullback(&out, &g)?;
        }
        let c = parse_field_elem(&pm.const_twist, spec)?;
        if !c.is_one() {
            out = out.quadratic_twist(&HomogPoly::constant(c))?;
        }
        Ok(out)
    }

    /// Predict the configuration of an entry from the base surface's
    /// clusters and the ramification structure of the effective base change,
    /// fiber by fiber, then apply the twist recipe at the type level. This is
    /// the independent combinatorial route against the polynomial pipeline.
    pub fn predicted_configuration(&self, e: &CatalogEntry) -> Result<Option<Configuration>> {
        let spec = e.field.resolve()?;
        let eff = match self.effective_map(e)? {
            Some(m) => m,
            None => return Ok(None),
        };
        let base = self.build_surface(&e.base_surface, &spec)?;
        self.predicted_configuration_with(e, &spec, &base, &eff)
            .map(Some)
    }

    fn predicted_configuration_with(
        &self,
        e: &CatalogEntry,
        spec: &Field,
        base: &WeierstrassModel,
        eff: &RationalMap,
    ) -> Result<Configuration> {
        let spec = spec.clone();
        let clusters = classify_fibers(base)?;
        let mut predicted: Vec<(HomogPoly, KodairaType)> = Vec::new();
        for c in &clusters {
            let fiber_poly = c.place.substitute(eff.numerator(), eff.denominator())?;
            let (_, sub) = crate::exactalg::squarefree_decompose(&fiber_poly)?;
            for cl in sub {
                let e_idx = cl.multiplicity;
                let t = crate::fibers::reduce_triple(
                    c.v_a.times(e_idx),
                    c.v_b.times(e_idx),
                    c.v_delta * e_idx,
                );
                predicted.push((cl.factor, t));
            }
        }
        let alpha = match &e.twist {
            TwistRecipe::None => None,
            TwistRecipe::Explicit(p) => Some(parse_homog(p, &spec)?),
            TwistRecipe::Transfer { from, to } => {
                Some(parse_homog(from, &spec)?.mul(&parse_homog(to, &spec)?))
            }
            TwistRecipe::AllStarred => Some(product_of_places(&predicted, &spec, |t| {
                t.is_starred()
            })),
            TwistRecipe::Deflate => Some(product_of_places(&predicted, &spec, |t| {
                *t == KodairaType::IStar(0)
            })),
            TwistRecipe::DeflateAndStar(target) => {
                let base_alpha =
                    product_of_places(&predicted, &spec, |t| *t == KodairaType::IStar(0));
                Some(base_alpha.mul(&parse_homog(target, &spec)?))
            }
        };
        let mut final_types = Vec::new();
        match alpha {
            None => {
                for (place, t) in predicted {
                    for _ in 0..place.degree() {
                        final_types.push(t);
                    }
                }
            }
            Some(alpha) => {
                for (place, t) in predicted {
                    let g = hp_gcd(&place, &alpha)?;
                    let toggled = if g.is_constant() { 0 } else { g.degree() };
                    for _ in 0..toggled {
                        final_types.push(twist_toggle(t));
                    }
                    for _ in 0..(place.degree() - toggled) {
                        final_types.push(t);
                    }
                }
            }
        }
        Ok(Configuration::from_types(final_types))
    }

    /// j-function compatibility: j of the computed model equals j of the
    /// base composed with the effective base change, as rational functions.
    ///
    /// Certified by exact evaluation at one more point than the degree of
    /// the cross-multiplied identity: two homogeneous polynomials of degree
    /// <= B that agree at B+1 distinct finite points are equal.
    pub fn check_j_composition(&self, e: &CatalogEntry) -> Result<Option<bool>> {
        let spec = e.field.resolve()?;
        let eff = match self.effective_map(e)? {
            Some(m) => m,
            None => return Ok(None),
        };
        let base = self.build_surface(&e.base_surface, &spec)?;
        let model = self.compute_entry_model(e)?;
        self.j_composition_with(&spec, &base, &eff, &model).map(Some)
    }

    fn j_composition_with(
        &self,
        spec: &Field,
        base: &WeierstrassModel,
        eff: &RationalMap,
        model: &WeierstrassModel,
    ) -> Result<bool> {
        let spec = spec.clone();
        // bound for deg(numX * denC) = deg(denX * numC)
        let bound = 12 * model.weight() as usize
            + 12 * base.weight() as usize * eff.degree() as usize;
        let minus_1728_64 = FieldElem::from_int(&spec, -1728 * 64);
        let j_pair = |a: &FieldElem, b: &FieldElem| -> (FieldElem, FieldElem) {
            // (-1728 (4a)^3, -16(4a^3+27b^2)) evaluated pointwise
            let a3 = a.mul(a).mul(a);
            let num = a3.mul(&minus_1728_64);
            let four = FieldElem::from_int(&spec, 4);
            let t27 = FieldElem::from_int(&spec, 27);
            let den = a3
                .mul(&four)
                .add(&b.mul(b).mul(&t27))
                .mul(&FieldElem::from_int(&spec, -16));
            (num, den)
        };
        let one = FieldElem::one(&spec);
        for k in 0..=(bound as i64 + 1) {
            let s = FieldElem::from_int(&spec, k);
            let ax = model.a().eval_point(&s, &one);
            let bx = model.b().eval_point(&s, &one);
            let (num_x, den_x) = j_pair(&ax, &bx);
            let n = eff.numerator().eval_point(&s, &one);
            let d = eff.denominator().eval_point(&s, &one);
            let ac = base.a().eval_point(&n, &d);
            let bc = base.b().eval_point(&n, &d);
            let (num_c, den_c) = j_pair(&ac, &bc);
            if num_x.mul(&den_c) != den_x.mul(&num_c) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Full analysis of one entry: the verification row plus the independent
    /// cross-checks (fiber-transformation prediction, j composition law,
    /// semi-stable extremality condition), computing the pipeline once.
    pub fn analyze_entry(&self, e: &CatalogEntry) -> EntryAnalysis {
        let start = Instant::now();
        let mut analysis = EntryAnalysis {
            row: ReportRow {
                id: e.id.clone(),
                status: Status::Pass,
                expected_config: e.expected_config.clone(),
                computed_config: None,
                euler: None,
                equation_checked: false,
                notes: Vec::new(),
                millis: 0,
            },
            prediction_matches: None,
            j_composition_holds: None,
            semistable_extremal: None,
        };
        if let Some(reason) = &e.skip {
            analysis.row.status = Status::Skipped(reason.clone());
        } else if !self.surfaces.contains_key(&e.base_surface) {
            analysis.row.status =
                Status::Skipped(format!("missing-base-surface:{}", e.base_surface));
        } else if e
            .map
            .as_deref()
            .map_or(false, |m| !self.maps.contains_key(m))
        {
            analysis.row.status =
                Status::Skipped(format!("missing-map:{}", e.map.as_deref().unwrap()));
        } else if let Err(err) = self.analyze_inner(e, &mut analysis) {
            analysis.row.status = Status::CatalogCorrupt(err.to_string());
        }
        analysis.row.millis = start.elapsed().as_millis();
        analysis
    }

    fn analyze_inner(&self, e: &CatalogEntry, out: &mut EntryAnalysis) -> Result<()> {
        let spec = e.field.resolve()?;
        let base = self.build_surface(&e.base_surface, &spec)?;
        let eff = self.effective_map(e)?;
        let mut model = match &eff {
            Some(m) => pullback(&base, m)?,
            None => base.clone(),
        };
        if let Some(alpha) = self.twist_polynomial(&model, &e.twist, &spec)? {
            model = model.quadratic_twist(&alpha)?;
        }
        let computed = configuration(&model)?;
        out.row.computed_config = Some(computed.to_string());
        out.row.euler = Some(model.euler_number()?);
        out.semistable_extremal = Some(
            computed.euler_total() == 24
                && computed.all_semistable()
                && computed.total_fibers() == 6,
        );
        let expected = Configuration::from_str(&e.expected_config)?;
        if computed != expected {
            out.row.status = Status::ConfigMismatch;
            return Ok(());
        }
        if let Some(pm) = &e.printed_model {
            out.row.equation_checked = true;
            let printed =
                WeierstrassModel::new(parse_homog(&pm.a, &spec)?, parse_homog(&pm.b, &spec)?)?;
            let normalized = self.apply_printed_normalization(&model, pm, &spec)?;
            if !models_equivalent(&normalized, &printed) {
                out.row.status = Status::EquationMismatch;
                return Ok(());
            }
        }
        if let Some(eff) = &eff {
            let predicted = self.predicted_configuration_with(e, &spec, &base, eff)?;
            out.prediction_matches = Some(predicted == computed);
            out.j_composition_holds =
                Some(self.j_composition_with(&spec, &base, eff, &model)?);
        }
        Ok(())
    }

    /// Verify entries whose id starts with `prefix` (all when None).
    pub fn verify_filtered(&self, prefix: Option<&str>, parallel: bool) -> VerificationReport {
        let selected: Vec<&CatalogEntry> = self
            .entries
            .iter()
            .filter(|e| prefix.map_or(true, |p| e.id.starts_with(p)))
            .collect();
        let rows = if parallel && selected.len() > 1 {
            let workers = std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(4)
                .min(selected.len());
            let next = std::sync::atomic::AtomicUsize::new(0);
            let slots: Vec<std::sync::Mutex<Option<ReportRow>>> =
                (0..selected.len()).map(|_| std::sync::Mutex::new(None)).collect();
            std::thread::scope(|scope| {
                for _ in 0..workers {
                    scope.spawn(|| loop {
                        let i = next.fetch_add(1, std::sync::atomic::Ordering::SeqCst);
                        if i >= selected.len() {
                            break;
                        }
                        let row = self.verify_entry(selected[i]);
                        *slots[i].lock().unwrap() = Some(row);
                    });
                }
            });
            slots
                .into_iter()
                .map(|m| m.into_inner().unwrap().unwrap())
                .collect()
        } else {
            selected.iter().map(|e| self.verify_entry(e)).collect()
        };
        VerificationReport { rows }
    }

    /// Run every entry.
    pub fn verify_all(&self, parallel: bool) -> VerificationReport {
        self.verify_filtered(None, parallel)
    }
}

fn product_of_places(
    predicted: &[(HomogPoly, KodairaType)],
    spec: &Field,
    pick: impl Fn(&KodairaType) -> bool,
) -> HomogPoly {
    let mut alpha = HomogPoly::one(spec);
    for (place, t) in predicted {
        if pick(t) {
            alpha = alpha.mul(place);
        }
    }
    alpha
}
