use super::*;
use crate::registry;

fn small_grid(only: &[&str]) -> Grid {
    Grid {
        algebras: vec!["K".into(), "Kx2-1".into()],
        coalgebras: vec!["grouplike2".into(), "Kx2-1*".into()],
        random: 3,
        only: only.iter().map(|s| s.to_string()).collect(),
        ..Grid::default()
    }
}

#[test]
fn filtering_by_tag_runs_only_matching_rows() {
    let doc = registry::load(Field::Rational).unwrap();
    let res = run(&doc, &small_grid(&["type2"])).unwrap();
    let ids: Vec<&str> = res.rows.iter().map(|r| r.id.as_str()).collect();
    assert_eq!(ids, vec!["type2-commutative", "type2-twisted"]);
    assert!(res.passed(), "{:#?}", res);
}

#[test]
fn unknown_row_is_an_error() {
    let doc = registry::load(Field::Rational).unwrap();
    assert!(matches!(run(&doc, &small_grid(&["type3"])), Err(Error::Unknown { .. })));
}

#[test]
fn grid_files_parse_with_defaults() {
    let g = Grid::parse(r#"{"only": ["tambara"], "random": 2}"#).unwrap();
    assert_eq!(g.random, 2);
    assert_eq!(g.q, Grid::default().q);
    assert!(Grid::parse(r#"{"onyl": []}"#).is_err());
}

#[test]
fn small_grid_passes_and_is_field_independent() {
    let q = run(&registry::load(Field::Rational).unwrap(), &small_grid(&[])).unwrap();
    for row in &q.rows {
        assert!(row.report.passed, "{}", row.report);
    }
    let p = run(&registry::load(Field::prime(7).unwrap()).unwrap(), &small_grid(&[])).unwrap();
    assert!(field_independence(&q, &p).passed);
    let mut flipped = p.clone();
    flipped.rows[0].report.verdicts[0].passed = false;
    let r = field_independence(&q, &flipped);
    assert!(!r.passed);
    assert!(r.verdicts[0].detail.as_ref().unwrap().starts_with("semi-examples/"));
}

#[test]
fn results_do_not_depend_on_thread_count() {
    let doc = registry::load(Field::Rational).unwrap();
    let grid = small_grid(&["2", "8"]);
    let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap().install(|| run(&doc, &grid).unwrap());
    let many = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap().install(|| run(&doc, &grid).unwrap());
    assert_eq!(one, many);
}
