use proptest::prelude::*;
use soliton_cli::table::{round_half_away, TableReport};

proptest! {
    #[test]
    fn rounding_is_close_and_idempotent(x in -1e4f64..1e4) {
        let r = round_half_away(x, 4);
        prop_assert!((r - x).abs() <= 5e-5 + 1e-12 * x.abs());
        prop_assert_eq!(round_half_away(r, 4), r);
    }

    #[test]
    fn rounding_is_odd(x in -1e4f64..1e4) {
        prop_assert_eq!(round_half_away(-x, 4), -round_half_away(x, 4));
    }

    #[test]
    fn csv_round_trips(
        cells in prop::collection::vec(prop::collection::vec(-100.0f64..100.0, 3), 1..5),
        lambda in 0.01f64..0.99,
    ) {
        let rows = cells.len();
        let cells: Vec<Vec<f64>> = cells.iter().map(|r| r.iter().map(|&v| round_half_away(v, 4)).collect()).collect();
        let marks = cells.iter().map(|r| r.iter().position(|&v| v < 0.0)).collect();
        let report = TableReport {
            lambda,
            s0_rows: (0..rows).map(|i| 2.0 + i as f64).collect(),
            l_columns: vec![5.0, 10.5, 20.0],
            cells,
            first_negative_marks: marks,
        };
        let csv = report.to_csv();
        let back = TableReport::from_csv(&csv).unwrap();
        prop_assert_eq!(back.to_csv(), csv);
        prop_assert_eq!(back, report);
    }
}
