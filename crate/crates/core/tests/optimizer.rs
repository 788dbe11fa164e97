use covcert_core::bounds::{bundled_odlyzko, OdlyzkoPair};
use covcert_core::optimizer::*;
use covcert_core::rigor::{parse_decimal, rat};
use covcert_core::Error;

const BITS: u32 = 256;

fn pair(a: &str, e: &str) -> OdlyzkoPair {
    OdlyzkoPair::parse(a, e).unwrap()
}

#[test]
fn rank_two_optimum() {
    let r = optimize_n2(&bundled_odlyzko(), &TGrid::default(), BITS).unwrap();
    // mpmath at 40 digits: 5.553561121728699853348317495442772660126
    let oracle = parse_decimal("5.5535611217286998533483").unwrap();
    assert!(r.best_value.agrees_with(&oracle, &rat(1, 1_000_000_000_000)));
    assert_eq!(r.best_pair, pair("21.512", "6.0001"));
    assert_eq!(r.best_t, Some(rat(6, 5)));
    assert!(r.best_value.hi() < &parse_decimal("6").unwrap());
    assert!(r.ties.is_empty());
    assert_eq!(r.points_evaluated, 3 * 249);
}

#[test]
fn rank_three_optimum() {
    let r = optimize_n3(&bundled_odlyzko(), BITS).unwrap();
    let oracle = parse_decimal("3.3072414164402651957089").unwrap();
    assert!(r.best_value.agrees_with(&oracle, &rat(1, 1_000_000_000_000)));
    assert_eq!(r.best_pair, pair("13.047", "3.8667"));
}

#[test]
fn filtered_tables() {
    // without the best row the optimum moves to (13.047, 3.8667): about 7.27
    let t = vec![pair("13.047", "3.8667"), pair("6.894", "2.2667")];
    let r = optimize_n2(&t, &TGrid::default(), 128).unwrap();
    assert_eq!(r.best_pair, pair("13.047", "3.8667"));
    assert!(r.best_value.agrees_with(&rat(727, 100), &rat(1, 100)));
    // the smallest row is never feasible in rank two
    assert!(matches!(optimize_n2(&[pair("6.894", "2.2667")], &TGrid::default(), 128), Err(Error::NoFeasiblePoint)));
    // in rank three (21.512, 6.0001) alone still gives a threshold, though a worse one
    let r3 = optimize_n3(&[pair("21.512", "6.0001")], 128).unwrap();
    assert!(r3.best_value.certainly_greater(&optimize_n3(&bundled_odlyzko(), 128).unwrap().best_value));
}

#[test]
fn empty_table_errors() {
    assert!(matches!(optimize_n2(&[], &TGrid::default(), 64), Err(Error::EmptyTable)));
    assert!(matches!(optimize_n3(&[], 64), Err(Error::EmptyTable)));
    assert!(matches!(find_rank4_pair(&[], 64), Err(Error::EmptyTable)));
}

#[test]
fn t_guards() {
    let p = pair("21.512", "6.0001");
    assert!(matches!(n2_rhs(&p, &rat(0, 1), 64), Err(Error::NonPositiveT)));
    assert!(matches!(n2_rhs(&p, &rat(-1, 2), 64), Err(Error::NonPositiveT)));
    assert!(matches!(n2_rhs(&p, &rat(9, 1), 64), Err(Error::InfeasibleBase)));
    assert!(n2_rhs(&p, &rat(6, 5), 64).is_ok());
}

#[test]
fn rank_four_search() {
    assert_eq!(find_rank4_pair(&bundled_odlyzko(), BITS).unwrap(), pair("6.894", "2.2667"));
    assert!(matches!(find_rank4_pair(&[pair("5.0", "2.2667")], BITS), Err(Error::NoFeasiblePoint)));
}

#[test]
fn same_result_for_any_thread_count() {
    let table = bundled_odlyzko();
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| (optimize_n2(&table, &TGrid::default(), 128).unwrap(), optimize_n3(&table, 128).unwrap()))
    };
    let one = run(1);
    assert_eq!(one, run(4));
    assert_eq!(one, run(3));
}

#[test]
fn coarse_grid_is_no_better() {
    let table = bundled_odlyzko();
    let fine = optimize_n2(&table, &TGrid::default(), 128).unwrap();
    let coarse = optimize_n2(&table, &TGrid { step: rat(1, 2), count: 17 }, 128).unwrap();
    assert!(!coarse.best_value.certainly_less(&fine.best_value));
}
