//! Inequalities that fail on exact inputs. The lists are frozen so that any
//! change in the arithmetic shows up as a diff here.

mod common;

use bettikit::arith::format_rational;
use bettikit::bounds::bound_e1;
use bettikit::explorer::{enumerate_sequences, fuzz, Check, Constraint, SearchSpec};
use bettikit::table::symmetrized_pure;

type Row = (&'static [i64], &'static str, &'static str);

const SYM_PURE_FAILURES: &[Row] = &[
    (&[0, 2, 5], "9", "20/3"),
    (&[0, 2, 7], "15", "147/10"),
    (&[0, 3, 7], "15", "49/4"),
    (&[0, 3, 9], "21", "20"),
    (&[0, 4, 9], "21", "18"),
    (&[0, 4, 11], "27", "715/28"),
    (&[0, 5, 11], "27", "143/6"),
    (&[0, 5, 13], "33", "156/5"),
    (&[0, 6, 13], "33", "208/7"),
    (&[0, 1, 2, 6, 7], "15", "147/10"),
    (&[0, 1, 3, 6, 7], "15", "49/4"),
    (&[0, 1, 3, 8, 9], "25", "24"),
    (&[0, 1, 4, 8, 9], "25", "108/5"),
    (&[0, 1, 4, 10, 11], "35", "935/28"),
    (&[0, 1, 5, 10, 11], "35", "187/6"),
    (&[0, 1, 5, 12, 13], "45", "429/10"),
    (&[0, 1, 6, 12, 13], "45", "286/7"),
    (&[0, 2, 3, 4, 7], "15", "147/10"),
    (&[0, 2, 3, 5, 7], "15", "49/4"),
    (&[0, 2, 3, 7, 9], "25", "24"),
    (&[0, 2, 4, 7, 9], "25", "108/5"),
    (&[0, 2, 4, 9, 11], "35", "935/28"),
    (&[0, 2, 5, 9, 11], "35", "187/6"),
    (&[0, 2, 5, 11, 13], "45", "429/10"),
    (&[0, 2, 6, 11, 13], "45", "286/7"),
    (&[0, 3, 4, 5, 9], "25", "24"),
    (&[0, 3, 4, 6, 9], "25", "108/5"),
    (&[0, 3, 4, 8, 11], "35", "935/28"),
    (&[0, 3, 5, 8, 11], "35", "187/6"),
    (&[0, 3, 5, 10, 13], "45", "429/10"),
    (&[0, 3, 6, 10, 13], "45", "286/7"),
    (&[0, 4, 5, 6, 11], "35", "935/28"),
    (&[0, 4, 5, 7, 11], "35", "187/6"),
    (&[0, 4, 5, 9, 13], "45", "429/10"),
    (&[0, 4, 6, 8, 13], "45", "1859/42"),
    (&[0, 4, 6, 9, 13], "45", "286/7"),
    (&[0, 5, 6, 7, 13], "45", "429/10"),
    (&[0, 5, 6, 8, 13], "45", "286/7"),
];

const E1_BOUND_FAILURES: &[Row] = &[
    (&[0, 1, 3], "1/2", "1/4"),
    (&[0, 2, 5], "3/2", "10/9"),
    (&[0, 2, 7], "5/2", "49/20"),
    (&[0, 3, 7], "5/2", "49/24"),
    (&[0, 3, 9], "7/2", "10/3"),
    (&[0, 4, 9], "7/2", "3"),
    (&[0, 1, 2, 4, 5], "1/24", "1/36"),
    (&[0, 1, 2, 6, 7], "1/8", "49/400"),
    (&[0, 1, 3, 6, 7], "1/8", "49/480"),
    (&[0, 1, 3, 8, 9], "5/24", "1/5"),
    (&[0, 1, 4, 8, 9], "5/24", "9/50"),
    (&[0, 2, 3, 4, 7], "1/8", "49/400"),
    (&[0, 2, 3, 5, 7], "1/8", "49/480"),
    (&[0, 2, 3, 7, 9], "5/24", "1/5"),
    (&[0, 2, 4, 7, 9], "5/24", "9/50"),
    (&[0, 3, 4, 5, 9], "5/24", "1/5"),
    (&[0, 3, 4, 6, 9], "5/24", "9/50"),
];

fn render(rows: &[Row]) -> Vec<(Vec<i64>, String, String)> {
    rows.iter().map(|(d, l, r)| (d.to_vec(), l.to_string(), r.to_string())).collect()
}

#[test]
fn symmetrized_pure_inequality_failures_are_stable() {
    let spec = SearchSpec::new(1, 5, 14, Constraint::DominatedByDual).with_checks([Check::SymPureBound]);
    let report = fuzz(&spec).unwrap();
    let check = &report.checks[0];
    assert_eq!(check.cases_checked, 1610);
    let got: Vec<_> = check
        .violations
        .iter()
        .map(|w| (w.input[0].degrees().to_vec(), format_rational(&w.lhs), format_rational(&w.rhs)))
        .collect();
    assert_eq!(got, render(SYM_PURE_FAILURES));
    // every failure has an odd top degree
    assert!(SYM_PURE_FAILURES.iter().all(|(d, _, _)| d.last().unwrap() % 2 == 1));
}

#[test]
fn e1_bound_failures_on_symmetrized_pure_tables_are_stable() {
    let spec = SearchSpec::new(1, 4, 10, Constraint::DominatedByDual);
    let mut got = Vec::new();
    let mut total = 0;
    for d in enumerate_sequences(&spec).unwrap() {
        total += 1;
        let b = bound_e1(&symmetrized_pure(&d, d.last()).unwrap()).unwrap();
        if !b.holds {
            got.push((d.degrees().to_vec(), format_rational(&b.e_value), format_rational(&b.bound)));
        }
    }
    assert_eq!(total, 205);
    assert_eq!(got, render(E1_BOUND_FAILURES));
}

#[test]
fn complete_intersection_two_three() {
    // k[x, y]/(f_2, f_3) has h = 1 + 2t + 2t^2 + t^3
    let ci = bettikit::table::BettiTable::from_ints([((0, 0), 1), ((1, 2), 1), ((1, 3), 1), ((2, 5), 1)]).unwrap();
    let b = bound_e1(&ci).unwrap();
    assert_eq!(format_rational(&b.e_value), "9");
    assert_eq!(format_rational(&b.bound), "20/3");
    assert!(!b.holds);
    let b0 = bettikit::bounds::bound_e0(&ci).unwrap();
    assert_eq!((format_rational(&b0.e_value), format_rational(&b0.bound)), ("6".into(), "5".into()));
}
