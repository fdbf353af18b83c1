use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use d4syl::characters::CharTable;
use d4syl::conjugacy::{ClassCensus, ClassFamily};
use d4syl::verify::{self, VerificationReport};
use d4syl::{build_tower_for_q, FieldTowerCtx};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn from_reports(reports: &[VerificationReport]) -> Outcome {
    match reports.iter().find(|r| !r.passed) {
        Some(r) => Err(r.to_string()),
        None => Ok(reports.iter().map(|r| r.detail.as_str()).collect::<Vec<_>>().join("; ")),
    }
}

fn err(e: d4syl::Error) -> String {
    e.to_string()
}

/// Classes per family and their common size at q = 3.
const FAMILIES_AT_3: [(ClassFamily, usize, u64); 9] = [
    (ClassFamily::Identity, 1, 1),
    (ClassFamily::X6, 2, 1),
    (ClassFamily::X5, 2, 3),
    (ClassFamily::X4, 26, 9),
    (ClassFamily::T3T5, 78, 81),
    (ClassFamily::T2T4T5, 162, 81),
    (ClassFamily::T1T6, 78, 243),
    (ClassFamily::T1T3, 208, 729),
    (ClassFamily::T1T2, 52, 6561),
];

fn census(ctx: &FieldTowerCtx, census: &ClassCensus) -> Outcome {
    let report = verify::verify_class_census(ctx, census, None).map_err(err)?;
    if !report.passed {
        return Err(report.to_string());
    }
    for (family, count, size) in FAMILIES_AT_3 {
        let members: Vec<_> = census.classes().iter().filter(|c| c.family == family).collect();
        if members.len() != count || members.iter().any(|c| c.size != size) {
            return Err(format!(
                "family {} has {} classes, expected {count} of size {size}",
                family.name(),
                members.len()
            ));
        }
    }
    let mut histogram = BTreeMap::new();
    for &(_, count, size) in &FAMILIES_AT_3 {
        *histogram.entry(size).or_insert(0) += count;
    }
    let expected: Vec<String> = histogram.iter().map(|(s, n)| format!("{n}x{s}")).collect();
    if !report.detail.contains(&expected.join(", ")) {
        return Err(format!(
            "orbit sizes {} differ from {}",
            report.detail,
            expected.join(", ")
        ));
    }
    Ok(report.detail)
}

fn main() -> ExitCode {
    let ctx = build_tower_for_q(3).expect("q = 3 tower");
    let classes = ClassCensus::new(&ctx);
    let table = CharTable::build(&ctx, &classes).expect("q = 3 table");

    let criteria: Vec<Criterion> = vec![
        ("class census at q=3", Box::new(|| census(&ctx, &classes))),
        (
            "count polynomials at q=3,5,7",
            Box::new(|| from_reports(&[verify::verify_counts(&[3, 5, 7]).map_err(err)?])),
        ),
        (
            "degree identity at q=3",
            Box::new(|| from_reports(&[verify::verify_degree_identity(&ctx)])),
        ),
        (
            "row and column orthogonality at q=3",
            Box::new(|| {
                from_reports(&[
                    verify::verify_row_orthogonality(&ctx, &table),
                    verify::verify_column_orthogonality(&ctx, &table),
                ])
            }),
        ),
        (
            "induction oracle equals closed-form values at q=3",
            Box::new(|| from_reports(&[verify::verify_character_oracle(&ctx, &table).map_err(err)?])),
        ),
        (
            "closed-form conjugation equals collection at q=3",
            Box::new(|| from_reports(&[verify::verify_conjugation(&ctx, &classes, 100_000, true, 6).map_err(err)?])),
        ),
        (
            "field identities at q=3",
            Box::new(|| from_reports(&[verify::verify_field_properties(&ctx)])),
        ),
        (
            "group axioms at q=3",
            Box::new(|| from_reports(&[verify::verify_group_axioms(&ctx, 1_000_000, 100_000, 8).map_err(err)?])),
        ),
    ];

    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {} {name} ({secs:.1} s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name} ({secs:.1} s): {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
