//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Everything is exact arithmetic, so every comparison is exact equality.
//! The catalog analysis (pipeline + cross-checks for all entries) is shared
//! across criteria through a OnceLock.

use std::str::FromStr;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use ellfib::catalog::{Catalog, EntryAnalysis, Status};
use ellfib::covers::{riemann_hurwitz_verify, hurwitz_feasible, ProjPoint};
use ellfib::exactalg::parse_homog;
use ellfib::fibers::Configuration;
use ellfib::weier::models_equivalent;

fn catalog() -> &'static Catalog {
    static CAT: OnceLock<Catalog> = OnceLock::new();
    CAT.get_or_init(|| Catalog::load_builtin().expect("builtin catalog loads"))
}

struct FullRun {
    analyses: Vec<EntryAnalysis>,
    elapsed: Duration,
}

fn full_run() -> &'static FullRun {
    static RUN: OnceLock<FullRun> = OnceLock::new();
    RUN.get_or_init(|| {
        let cat = catalog();
        let start = Instant::now();
        let entries: Vec<_> = cat.entries.iter().collect();
        let next = std::sync::atomic::AtomicUsize::new(0);
        let slots: Vec<std::sync::Mutex<Option<EntryAnalysis>>> =
            (0..entries.len()).map(|_| std::sync::Mutex::new(None)).collect();
        let workers = std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(4);
        std::thread::scope(|scope| {
            for _ in 0..workers {
                scope.spawn(|| loop {
                    let i = next.fetch_add(1, std::sync::atomic::Ordering::SeqCst);
                    if i >= entries.len() {
                        break;
                    }
                    let a = cat.analyze_entry(entries[i]);
                    *slots[i].lock().unwrap() = Some(a);
                });
            }
        });
        FullRun {
            analyses: slots
                .into_iter()
                .map(|m| m.into_inner().unwrap().unwrap())
                .collect(),
            elapsed: start.elapsed(),
        }
    })
}

fn analysis(id: &str) -> &'static EntryAnalysis {
    full_run()
        .analyses
        .iter()
        .find(|a| a.row.id == id)
        .unwrap_or_else(|| panic!("no entry {id}"))
}

fn cfg(s: &str) -> Configuration {
    Configuration::from_str(s).unwrap()
}

#[test]
fn criterion_1_base_change_identities() {
    let cat = catalog();
    let start = Instant::now();
    let mut checked = 0;
    for m in cat.maps.values() {
        if let Some(ident) = &m.identity_check {
            let spec = m.field.resolve().unwrap();
            let n = parse_homog(&m.n, &spec).unwrap();
            let d = parse_homog(&m.d, &spec).unwrap();
            let rhs = parse_homog(ident, &spec).unwrap();
            assert_eq!(n.sub(&d), rhs, "identity of map {} fails", m.id);
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    assert!(checked >= 15, "only {checked} identities embedded");
    assert!(
        elapsed < Duration::from_secs(1),
        "identities took {elapsed:?}"
    );
    println!("criterion 1 PASS: {checked} base-change identities verified by expansion in {elapsed:?}");
}

#[test]
fn criterion_2_rational_base_surfaces() {
    let expected = [
        ("x411-raw", "[1,1,4*]"),
        ("x141-norm", "[1,4,1*]"),
        ("x222-norm", "[2,2,2*]"),
        ("x431-norm", "[1,3,IV*]"),
        ("x321-norm", "[1,2,III*]"),
    ];
    for (id, want) in expected {
        let a = analysis(id);
        assert_eq!(a.row.status, Status::Pass, "{id}: {:?}", a.row.status);
        assert_eq!(cfg(a.row.computed_config.as_ref().unwrap()), cfg(want), "{id}");
        assert_eq!(a.row.euler, Some(12), "{id} euler");
    }
    println!("criterion 2 PASS: the five base surfaces classify to their stated fibers with Euler number 12");
}

/// The 32 semi-stable configurations over Q from the introduction table.
const TABLE_32: [&str; 32] = [
    "[1,1,1,2,3,16]", "[1,1,1,2,5,14]", "[1,1,1,3,3,15]", "[1,1,1,3,6,12]",
    "[1,1,1,5,6,10]", "[1,1,2,2,3,15]", "[1,1,2,3,3,14]", "[1,1,2,4,4,12]",
    "[1,1,2,4,6,10]", "[1,1,3,3,8,8]", "[1,1,3,4,6,9]", "[1,2,2,2,3,14]",
    "[1,2,2,2,5,12]", "[1,2,2,2,7,10]", "[1,2,2,3,4,12]", "[1,2,2,3,6,10]",
    "[1,2,2,5,6,8]", "[1,2,2,6,6,7]", "[1,2,3,3,3,12]", "[1,2,3,4,4,10]",
    "[1,2,4,4,6,7]", "[1,2,4,5,6,6]", "[1,3,3,3,5,9]", "[1,3,3,5,6,6]",
    "[1,3,4,4,4,8]", "[2,2,2,4,6,8]", "[2,2,2,3,5,10]", "[2,2,3,3,4,10]",
    "[2,2,3,4,5,8]", "[2,2,4,4,6,6]", "[2,3,3,3,4,9]", "[2,3,4,4,5,6]",
];

#[test]
fn criterion_3_semistable_k3_reproduction_over_q() {
    let run = full_run();
    let fig_entries: Vec<&EntryAnalysis> = run
        .analyses
        .iter()
        .filter(|a| a.row.id.starts_with("fig") || a.row.id.starts_with("dup-"))
        .collect();
    assert_eq!(fig_entries.len(), 33, "7 + 8 + 17 printed pullbacks plus the duplicate");
    let mut realized: Vec<Configuration> = Vec::new();
    let mut errata_notes = 0;
    for a in &fig_entries {
        assert_eq!(a.row.status, Status::Pass, "{}: {:?}", a.row.id, a.row.status);
        assert_eq!(a.row.euler, Some(24), "{} euler", a.row.id);
        assert_eq!(
            a.semistable_extremal,
            Some(true),
            "{}: needs euler 24, six cusps, all semi-stable",
            a.row.id
        );
        // every printed equation of sections 4-6 must be matched exactly
        if !a.row.id.starts_with("dup-") {
            assert!(a.row.equation_checked, "{} has a printed model", a.row.id);
        }
        errata_notes += a
            .row
            .notes
            .iter()
            .filter(|n| n.contains("erratum"))
            .count();
        realized.push(cfg(a.row.computed_config.as_ref().unwrap()));
    }
    for want in TABLE_32 {
        let target = cfg(want);
        assert!(
            realized.iter().any(|c| *c == target),
            "configuration {want} not realized"
        );
    }
    // the four documented errata are reported as recomputed
    let has_note = |id: &str, frag: &str| {
        analysis(id)
            .row
            .notes
            .iter()
            .any(|n| n.contains(frag))
    };
    assert!(has_note("fig29", "50t^8"), "50t^82 erratum note");
    assert!(has_note("fig12", "artifact"), "section-5 artifact note");
    assert!(has_note("fig21", "s+48t"), "s+24t vs s+48t note");
    assert!(
        analysis("ext-pitilde").row.notes.iter().any(|n| n.contains("t/(5v+2)"))
            || catalog().maps["ext-pitilde"].erratum.is_some(),
        "pitilde coefficient-format note"
    );
    assert!(errata_notes >= 3);
    assert!(
        run.elapsed < Duration::from_secs(60),
        "full run took {:?}",
        run.elapsed
    );
    println!(
        "criterion 3 PASS: all 32 configurations over Q reproduced (33 entries), every printed equation matched, errata recomputed, full run {:?}",
        run.elapsed
    );
}

#[test]
fn criterion_4_extension_field_entries() {
    let expected = [
        ("ext-m7-a", "[1,1,2,2,4,14]"),
        ("ext-m7-b", "[1,2,2,4,7,8]"),
        ("ext-m3-a", "[1,1,2,6,6,8]"),
        ("ext-m3-b", "[1,2,2,3,4,12]"),
        ("ext-c7", "[1,2,2,4,5,10]"),
        ("ext-pitilde", "[1,2,3,3,6,9]"),
        ("ext-sqrt2", "[1,2,3,4,6,8]"),
    ];
    for (id, want) in expected {
        let a = analysis(id);
        assert_eq!(a.row.status, Status::Pass, "{id}: {:?}", a.row.status);
        assert_eq!(cfg(a.row.computed_config.as_ref().unwrap()), cfg(want), "{id}");
        assert_eq!(a.semistable_extremal, Some(true), "{id}");
    }
    println!("criterion 4 PASS: all 7 extension-field constructions produce their stated configurations");
}

#[test]
fn criterion_5_hurwitz_verdicts() {
    // degree 12, W = II: total ramification exceeds 2d-2 for every split of
    // six preimages over the other two cusps, with either (12) or (6,6)
    for w_profile in [vec![12u32], vec![6, 6]] {
        for k2 in 1..=5u32 {
            let k3 = 6 - k2;
            let mk = |k: u32| -> Vec<u32> {
                let mut v = vec![12 - k + 1];
                v.extend(std::iter::repeat(1).take((k - 1) as usize));
                v
            };
            assert!(
                !hurwitz_feasible(12, &[w_profile.clone(), mk(k2), mk(k3)]),
                "degree-12 case must be infeasible"
            );
        }
    }
    // degree 8, W = III with (4,4) or (8)
    for w_profile in [vec![4u32, 4], vec![8]] {
        for k2 in 1..=5u32 {
            let k3 = 6 - k2;
            let mk = |k: u32| -> Vec<u32> {
                let mut v = vec![8 - k + 1];
                v.extend(std::iter::repeat(1).take((k - 1) as usize));
                v
            };
            assert!(
                !hurwitz_feasible(8, &[w_profile.clone(), mk(k2), mk(k3)]),
                "degree-8 case must be infeasible"
            );
        }
    }
    // every shipped map is feasible and ramified exactly over 0, 1, infinity
    let cat = catalog();
    let mut verified = 0;
    for m in cat.maps.values() {
        let spec = m.field.resolve().unwrap();
        let map = cat.build_map(&m.id, &spec).unwrap();
        let pts = [
            ProjPoint::zero(&spec),
            ProjPoint::one(&spec),
            ProjPoint::infinity(&spec),
        ];
        let mut profiles = Vec::new();
        for p in &pts {
            let prof = ellfib::covers::ramification_profile(&map, p).unwrap();
            profiles.push(prof.indices);
        }
        assert!(
            hurwitz_feasible(map.degree(), &profiles),
            "map {} infeasible",
            m.id
        );
        assert!(
            riemann_hurwitz_verify(&map, &pts).unwrap(),
            "map {} ramifies outside its cusps",
            m.id
        );
        verified += 1;
    }
    println!("criterion 5 PASS: both nonexistence verdicts reproduced; all {verified} shipped maps satisfy Riemann-Hurwitz over their cusps");
}

#[test]
fn criterion_6_prediction_and_j_cross_checks() {
    let run = full_run();
    let mut pred = 0;
    let mut jcount = 0;
    for a in &run.analyses {
        if a.row.status != Status::Pass {
            continue;
        }
        if let Some(ok) = a.prediction_matches {
            assert!(ok, "{}: fiber-transformation prediction mismatch", a.row.id);
            pred += 1;
        }
        if let Some(ok) = a.j_composition_holds {
            assert!(ok, "{}: j composition law fails", a.row.id);
            jcount += 1;
        }
    }
    assert!(pred >= 90, "only {pred} prediction checks ran");
    assert_eq!(pred, jcount);
    println!("criterion 6 PASS: fiber-transformation prediction and j-composition law hold for all {pred} pullback entries");
}

#[test]
fn criterion_7_table_two_constructions() {
    let run = full_run();
    let rows: Vec<&EntryAnalysis> = run
        .analyses
        .iter()
        .filter(|a| a.row.id.starts_with("no"))
        .collect();
    let mut passed = 0;
    let mut skipped = 0;
    for a in &rows {
        match &a.row.status {
            Status::Pass => passed += 1,
            Status::Skipped(reason) => {
                assert!(
                    reason.contains("missing-base-surface"),
                    "{}: unexpected skip {reason}",
                    a.row.id
                );
                skipped += 1;
            }
            other => panic!("{}: {other:?}", a.row.id),
        }
    }
    assert!(passed >= 45, "only {passed} table rows reproduced");
    assert_eq!(skipped, 18, "the double-cover rows skip");
    // the two no148 fibrations: same configuration, inequivalent models
    let cat = catalog();
    let a = cat
        .compute_entry_model(cat.entry("no148a").unwrap())
        .unwrap();
    let b = cat
        .compute_entry_model(cat.entry("no148b").unwrap())
        .unwrap();
    assert_eq!(
        analysis("no148a").row.computed_config,
        analysis("no148b").row.computed_config
    );
    assert!(
        !models_equivalent(&a, &b),
        "the two no148 fibrations must be inequivalent"
    );
    println!("criterion 7 PASS: {passed} table-2 rows reproduced, {skipped} rows requiring external surfaces SKIPPED, no148 variants inequivalent");
}

#[test]
fn criterion_8_mutation_negative_controls() {
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(20260809);
    let cat = catalog();
    // entries that pass and run a full pipeline
    let candidates: Vec<&str> = cat
        .entries
        .iter()
        .filter(|e| e.skip.is_none() && e.map.is_some() && cat.surfaces.contains_key(&e.base_surface))
        .map(|e| e.id.as_str())
        .collect();
    let picks: Vec<&&str> = candidates
        .choose_multiple(&mut rng, 12)
        .collect();
    let mut flipped = 0;
    for (i, id) in picks.iter().enumerate() {
        let mut mutated = cat.clone();
        let entry = mutated.entry(id).unwrap().clone();
        if i % 2 == 0 {
            // corrupt one coefficient of the base surface's A
            let def = mutated.surfaces.get_mut(&entry.base_surface).unwrap();
            let spec = def.field.resolve().unwrap();
            let a = parse_homog(&def.a, &spec).unwrap();
            let k = rng.gen_range(0..=a.degree());
            let bump = format!("({})+(s^{}*t^{})", def.a, k, a.degree() - k);
            def.a = bump;
        } else {
            // corrupt the map numerator; identity-checked maps must trip
            // CATALOG_CORRUPT, the rest a config mismatch
            let map_id = entry.map.clone().unwrap();
            let def = mutated.maps.get_mut(&map_id).unwrap();
            let spec = def.field.resolve().unwrap();
            let n = parse_homog(&def.n, &spec).unwrap();
            let k = rng.gen_range(0..=n.degree());
            def.n = format!("({})+(s^{}*t^{})", def.n, k, n.degree() - k);
        }
        let row = mutated.verify_entry(&entry);
        assert!(
            matches!(
                row.status,
                Status::ConfigMismatch | Status::EquationMismatch | Status::CatalogCorrupt(_)
            ),
            "{id}: corruption not detected, got {:?} ({:?})",
            row.status,
            row.computed_config
        );
        flipped += 1;
    }
    assert!(flipped >= 10);
    println!("criterion 8 PASS: {flipped} random single-coefficient corruptions all flipped their entries to a failure status");
}

#[test]
fn negative_control_wrong_expectation_mismatches() {
    let cat = catalog();
    let mut e = cat.entry("fig2").unwrap().clone();
    e.expected_config = "[1,1,1,1,2,18]".into();
    let row = cat.verify_entry(&e);
    assert_eq!(row.status, Status::ConfigMismatch);
    println!("negative control PASS: a deliberately wrong expectation reports CONFIG_MISMATCH");
}
