//! Self-checks run by `sqdisc verify`: the summary table on bundled and
//! generated curves, the family identities, the Fermat parametrization,
//! and the quotient map.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use sqdisc_core::algebra::{is_perfect_square, rat, ratio, Int, Rat};
use sqdisc_core::families::{
    d_search, delta3, delta_n, e3, e3_witness, e_alt, e_alt_params, e_n, e_n_coefficients,
    e_sq3, quotient_preimages_of_three, rational_short_discriminant, simplest_cubic,
    verify_quotient_map,
};
use sqdisc_core::fermat::{decompose, enumerate_solutions, param_forward};
use sqdisc_core::{FermatParams, Mod2Image, ShortModel, Sq3Variant, TorsionShape};

use crate::analysis::{analyze, analyze_short, table_row_consistent};
use crate::fixtures::TABLE_ROWS;
use crate::records::parse_curves;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Table,
    Families,
    Fermat,
    Quotient,
    All,
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "table" => Ok(Suite::Table),
            "families" => Ok(Suite::Families),
            "fermat" => Ok(Suite::Fermat),
            "quotient" => Ok(Suite::Quotient),
            "all" => Ok(Suite::All),
            _ => Err(format!("unknown suite {s:?} (table, families, fermat, quotient, all)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        if self.detail.is_empty() {
            write!(f, "{status}  {}", self.name)
        } else {
            write!(f, "{status}  {}  ({})", self.name, self.detail)
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn yes_no(s: &str) -> Option<bool> {
    match s {
        "yes" => Some(true),
        "no" => Some(false),
        _ => None,
    }
}

/// Checks every annotated record of `text` against its expected triple and
/// against the table rule. Unannotated records are checked against the
/// rule only.
pub fn verify_table_text(text: &str) -> Vec<Check> {
    let parsed = parse_curves(text);
    let mut checks: Vec<Check> = parsed
        .diagnostics
        .iter()
        .map(|d| Check::new(format!("table: parse {d}"), false, ""))
        .collect();
    for r in &parsed.records {
        let name = format!("table: {}", r.name());
        let a = match analyze(&r.model()) {
            Ok(a) => a,
            Err(e) => {
                checks.push(Check::new(name, false, e.to_string()));
                continue;
            }
        };
        let got = format!("{} {} {}", a.torsion, if a.is_square() { "yes" } else { "no" }, a.image);
        let mut ok = table_row_consistent(a.torsion, a.is_square(), a.image);
        if let [t, s, i, ..] = r.trailing.as_slice() {
            let expected = (
                t.parse::<TorsionShape>().ok(),
                yes_no(s),
                i.parse::<Mod2Image>().ok(),
            );
            ok &= expected == (Some(a.torsion), Some(a.is_square()), Some(a.image));
            checks.push(Check::new(name, ok, format!("expected {t} {s} {i}, got {got}")));
        } else {
            checks.push(Check::new(name, ok, format!("got {got}")));
        }
    }
    checks
}

/// The table rows that must each be exercised by a bundled curve.
pub fn table_rows() -> Vec<(TorsionShape, bool)> {
    let mut rows = Vec::new();
    for shape in TorsionShape::all() {
        match shape {
            TorsionShape::Cyclic(1 | 3) => {
                rows.push((shape, true));
                rows.push((shape, false));
            }
            TorsionShape::Product(_) => rows.push((shape, true)),
            _ => rows.push((shape, false)),
        }
    }
    rows
}

fn generated_table_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    let mut push = |name: String, e: sqdisc_core::Result<ShortModel>, order: u32| {
        let check = match e.and_then(|e| analyze_short(&e)) {
            Ok(a) => {
                let ok = table_row_consistent(a.torsion, a.is_square(), a.image)
                    && a.torsion.order() % order == 0;
                Check::new(name, ok, format!("{} {}", a.torsion, a.image))
            }
            Err(err) => Check::new(name, false, err.to_string()),
        };
        checks.push(check);
    };
    for n in [5u32, 7, 9] {
        for alpha in [rat(2), rat(-1), ratio(1, 2), ratio(-3, 5)] {
            push(format!("table: E{n}({alpha})"), e_n(n, &alpha), n);
        }
    }
    for (a, b) in [(1, 1), (2, -3), (-1, 4)] {
        push(format!("table: E3({a}, {b})"), e3(&a.into(), &b.into()), 3);
    }
    for p in [(1, 0, 0, 1), (2, 1, 1, 1), (1, -2, 3, 1)] {
        let p = FermatParams::new(p.0, p.1, p.2, p.3);
        for v in [Sq3Variant::First, Sq3Variant::Second] {
            push(format!("table: {v:?} family at {p}"), e_sq3(v, &p), 3);
        }
        push(format!("table: e_alt at {p}"), e_alt(&p), 1);
    }
    checks
}

pub fn table_suite() -> Vec<Check> {
    let mut checks = verify_table_text(TABLE_ROWS);
    let covered: BTreeSet<(TorsionShape, bool)> = parse_curves(TABLE_ROWS)
        .records
        .iter()
        .filter_map(|r| Some((r.trailing.first()?.parse().ok()?, yes_no(r.trailing.get(1)?)?)))
        .collect();
    let missing: Vec<String> = table_rows()
        .into_iter()
        .filter(|row| !covered.contains(row))
        .map(|(s, q)| format!("{s}/{q}"))
        .collect();
    checks.push(Check::new("table: every row has a fixture", missing.is_empty(), missing.join(", ")));
    checks.extend(generated_table_checks());
    checks
}

pub fn families_suite() -> Vec<Check> {
    let mut checks = Vec::new();
    for n in [5u32, 7, 9] {
        let ok = (-6..=6)
            .flat_map(|p| (1..=4).map(move |q| ratio(p, q)))
            .filter(|a| !delta_n(n, a).unwrap().is_zero())
            .all(|a| {
                let (x, y) = e_n_coefficients(n, &a).unwrap();
                rational_short_discriminant(&x, &y) == delta_n(n, &a).unwrap() && e_n(n, &a).is_ok()
            });
        checks.push(Check::new(format!("families: E{n} discriminant closed form"), ok, ""));
    }
    let mut ok = true;
    for a in -5i64..=5 {
        for b in -5i64..=5 {
            let (a, b) = (Int::from(a), Int::from(b));
            if delta3(&a, &b).is_zero() {
                continue;
            }
            ok &= match e3(&a, &b) {
                Ok(e) => e.to_long().order_up_to(&e3_witness(&a, &b), 3).ok().flatten() == Some(3),
                Err(_) => false,
            };
        }
    }
    checks.push(Check::new("families: E3 discriminant and 3-torsion witness", ok, ""));

    let mut square_ok = true;
    let mut roundtrip_ok = true;
    for p in grid(2) {
        for v in [Sq3Variant::First, Sq3Variant::Second] {
            if let Ok(e) = e_sq3(v, &p) {
                square_ok &= is_perfect_square(&e.discriminant()).is_some();
            }
        }
        if let Ok(e) = e_alt(&p) {
            square_ok &= is_perfect_square(&e.discriminant()).is_some();
            roundtrip_ok &= e_alt_params(&e).is_ok();
        }
    }
    checks.push(Check::new("families: square discriminants on [-2,2]^4", square_ok, ""));
    checks.push(Check::new("families: e_alt parameters round trip", roundtrip_ok, ""));

    let simplest = (-10i64..=10).all(|m| simplest_cubic(&Int::from(m)).is_ok());
    checks.push(Check::new("families: simplest cubics have image C3", simplest, ""));

    for (n, expected) in [(5u32, vec![0]), (7, vec![0, 1]), (9, vec![0, 1])] {
        let found = d_search(n, 100).unwrap_or_default();
        let want: Vec<(Rat, Rat)> = expected.into_iter().map(|a| (rat(a), rat(0))).collect();
        checks.push(Check::new(
            format!("families: D{n} points of height <= 100"),
            found == want,
            format!("{} found", found.len()),
        ));
    }
    checks
}

fn grid(r: i64) -> Vec<FermatParams> {
    let range = || -r..=r;
    range()
        .flat_map(|a| range().flat_map(move |b| range().flat_map(move |c| range().map(move |d| FermatParams::new(a, b, c, d)))))
        .collect()
}

pub fn fermat_suite() -> Vec<Check> {
    let forward = grid(3).iter().all(|p| {
        let s = param_forward(p);
        sqdisc_core::fermat::on_surface(s.x(), s.y(), s.z())
    });
    let sols = enumerate_solutions(12);
    let roundtrip = sols
        .iter()
        .all(|s| decompose(s).is_ok_and(|p| param_forward(&p) == *s));
    let small: Vec<(i64, i64, i64)> = enumerate_solutions(3)
        .iter()
        .filter_map(sqdisc_core::fermat::as_i128)
        .map(|(x, y, z)| (x as i64, y as i64, z as i64))
        .collect();
    let mut expected = vec![(0, 0, 0), (2, 0, 1), (-2, 0, 1), (9, 3, 3), (0, 6, 3), (0, -6, 3)];
    for (x, y) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
        expected.push((x, y, 1));
    }
    for (x, y) in [(9, -3), (-9, 3), (-9, -3)] {
        expected.push((x, y, 3));
    }
    let mut small_sorted = small.clone();
    small_sorted.sort();
    expected.sort();
    vec![
        Check::new("fermat: forward map lands on the surface", forward, ""),
        Check::new("fermat: solutions with z <= 12 decompose", roundtrip, format!("{} solutions", sols.len())),
        Check::new("fermat: complete list for z <= 3", small_sorted == expected, ""),
    ]
}

pub fn quotient_suite() -> Vec<Check> {
    vec![
        Check::new("quotient: identity, curve equation, order-3 automorphism", verify_quotient_map(), ""),
        Check::new(
            "quotient: no rational preimage of (3, 0)",
            quotient_preimages_of_three().is_ok_and(|v| v.is_empty()),
            "",
        ),
    ]
}

pub fn verify_suite(suite: Suite) -> SuiteReport {
    let checks = match suite {
        Suite::Table => table_suite(),
        Suite::Families => families_suite(),
        Suite::Fermat => fermat_suite(),
        Suite::Quotient => quotient_suite(),
        Suite::All => [table_suite(), families_suite(), fermat_suite(), quotient_suite()].concat(),
    };
    SuiteReport { checks }
}
