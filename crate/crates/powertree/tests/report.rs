use std::collections::HashSet;
use std::time::Instant;

use powertree::bench::{mean_sd, run_benchmark, RunReport};
use powertree::config::{AlgoTag, Algorithm, SolverConfig};
use powertree::ingest::generate_file;
use powertree::report::{emit_csv, emit_table, write_csv, CSV_COMMENT, CSV_HEADER};
use powertree::svg::{file_name, render_svg, svg_string, PALETTE};
use powertree::Error;
use powertree_core::{BoundedTree, Instance};

fn small_config(runs: usize) -> SolverConfig {
    SolverConfig {
        runs,
        hop_bound: 4,
        init_attempts: 5,
        seed: 42,
        ..SolverConfig::default()
    }
}

fn reports(count: usize, n: usize, runs: usize) -> Vec<RunReport> {
    let file = generate_file(count, n, 1).unwrap();
    run_benchmark(&small_config(runs), &file).unwrap()
}

fn without_times(reports: &[RunReport]) -> Vec<RunReport> {
    reports
        .iter()
        .cloned()
        .map(|mut r| {
            r.average_seconds = 0.0;
            r.runs.iter_mut().for_each(|run| run.seconds = 0.0);
            r
        })
        .collect()
}

#[test]
fn single_run_has_zero_spread() {
    for r in reports(1, 15, 1) {
        assert_eq!(r.sd, 0.0);
        assert_eq!(r.best, r.average);
    }
}

#[test]
fn statistics_match_recomputation() {
    for r in reports(2, 20, 4) {
        let ws: Vec<f64> = r.runs.iter().map(|x| x.objective).collect();
        let mean = ws.iter().sum::<f64>() / ws.len() as f64;
        let sd = (ws.iter().map(|w| (w - mean).powi(2)).sum::<f64>() / ws.len() as f64).sqrt();
        assert!((r.average - mean).abs() <= 1e-12);
        assert!((r.sd - sd).abs() <= 1e-12);
        assert_eq!(r.best, ws.iter().copied().fold(f64::INFINITY, f64::min));
        assert!(r.best <= r.average);
        assert!(r.best <= r.initial_objective);
        assert_eq!(r.best_tree.objective(), r.best);
        let seeds: Vec<u64> = r.runs.iter().map(|x| x.seed).collect();
        assert_eq!(seeds, [42, 43, 44, 45]);
    }
    assert_eq!(mean_sd(&[1.0, 3.0]), (2.0, 1.0));
}

#[test]
fn same_seed_same_reports() {
    let a = reports(2, 18, 3);
    let b = reports(2, 18, 3);
    assert_eq!(without_times(&a), without_times(&b));
}

#[test]
fn missing_instance_is_an_error() {
    let file = generate_file(2, 10, 0).unwrap();
    let config = SolverConfig {
        nr: Some(3),
        ..small_config(1)
    };
    assert!(matches!(
        run_benchmark(&config, &file),
        Err(Error::NoSuchInstance { nr: 3, len: 2 })
    ));
}

#[test]
fn fifty_points_vns_is_quick() {
    let file = generate_file(1, 50, 0).unwrap();
    let config = SolverConfig {
        algo: AlgoTag::Vns,
        hop_bound: 7,
        nr: Some(1),
        ..SolverConfig::default()
    };
    let start = Instant::now();
    let r = run_benchmark(&config, &file).unwrap();
    assert_eq!(r.len(), 1);
    assert_eq!(r[0].runs.len(), 10);
    assert!(start.elapsed().as_secs() < 60);
}

/// Data rows of an emitted table as numbers, markers stripped.
fn parse_table(text: &str) -> Vec<Vec<Option<f64>>> {
    text.lines()
        .skip(1)
        .map(|line| {
            line.split_whitespace()
                .map(|cell| cell.trim_end_matches('*').parse().ok())
                .collect()
        })
        .collect()
}

#[test]
fn table_layout() {
    let rs = reports(1, 15, 2);
    let text = emit_table(&rs[..1]);
    assert_eq!(text.lines().count(), 2);
    let header: Vec<&str> = text.lines().next().unwrap().split_whitespace().collect();
    assert_eq!(header[..5], ["D", "n", "nr", "W(T_CH)", "Wbest:ACO"]);

    let text = emit_table(&rs);
    assert_eq!(text.lines().count(), 2);
    let header: Vec<&str> = text.lines().next().unwrap().split_whitespace().collect();
    assert_eq!(header.len(), 4 + 4 * 3);
    let row: Vec<&str> = text.lines().nth(1).unwrap().split_whitespace().collect();
    let best = rs.iter().map(|r| r.best).fold(f64::INFINITY, f64::min);
    for (i, r) in rs.iter().enumerate() {
        assert_eq!(row[4 + i].ends_with('*'), r.best == best, "{row:?}");
    }
}

#[test]
fn table_round_trip_at_two_decimals() {
    let rs = reports(3, 12, 3);
    let rows = parse_table(&emit_table(&rs));
    assert_eq!(rows.len(), 3);
    for row in rows {
        let nr = row[2].unwrap() as usize;
        let group: Vec<&RunReport> = rs.iter().filter(|r| r.nr == nr).collect();
        assert_eq!(row[0], Some(4.0));
        assert_eq!(row[1], Some(12.0));
        let two = |x: f64| format!("{x:.2}").parse::<f64>().unwrap();
        assert_eq!(row[3], Some(two(group[0].initial_objective)));
        for (i, a) in Algorithm::ALL.iter().enumerate() {
            let r = group.iter().find(|r| r.algorithm == *a).unwrap();
            assert_eq!(row[4 + i], Some(two(r.best)));
            assert_eq!(row[7 + i], Some(two(r.average)));
            assert_eq!(row[10 + i], Some(two(r.sd)));
        }
    }
}

#[test]
fn csv_rows_and_round_trip() {
    let rs = reports(2, 14, 3);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.csv");
    emit_csv(&rs, &path).unwrap();
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().next(), Some(CSV_COMMENT));
    assert_eq!(text.lines().nth(1), Some(CSV_HEADER.join(",").as_str()));

    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_path(&path)
        .unwrap();
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 2 * 3 * 3 + 2 * 3 * 4);

    for r in &rs {
        let mine: Vec<&csv::StringRecord> = rows
            .iter()
            .filter(|row| row[2] == r.nr.to_string() && &row[3] == r.algorithm.name())
            .collect();
        let value = |tag: &str| -> f64 {
            mine.iter().find(|row| &row[4] == tag).unwrap()[5].parse().unwrap()
        };
        let ws: Vec<f64> = mine
            .iter()
            .filter(|row| row[4].parse::<u64>().is_ok())
            .map(|row| row[5].parse().unwrap())
            .collect();
        assert_eq!(ws.len(), 3);
        let (mean, sd) = mean_sd(&ws);
        assert!((value("avg") - mean).abs() <= 1e-9);
        assert!((value("sd") - sd).abs() <= 1e-9);
        assert!((value("best") - r.best).abs() <= 1e-9);
        assert!((value("init") - r.initial_objective).abs() <= 1e-9);
        assert_eq!(value("avg"), r.average);
    }
}

#[test]
fn csv_to_unwritable_path_fails() {
    let rs = reports(1, 8, 1);
    let dir = tempfile::tempdir().unwrap();
    assert!(matches!(
        emit_csv(&rs, dir.path().join("no/such/dir/out.csv")),
        Err(Error::Io { .. })
    ));
    let mut buf = Vec::new();
    write_csv(&rs, &mut buf).unwrap();
    assert!(!buf.is_empty());
}

fn edge_colors(svg: &str) -> HashSet<String> {
    let doc = roxmltree::Document::parse(svg).unwrap();
    doc.descendants()
        .filter(|n| n.has_tag_name("line"))
        .map(|n| n.attribute("stroke").unwrap().to_string())
        .collect()
}

#[test]
fn two_node_drawing() {
    let inst = Instance::from_coords([(0.2, 0.3), (0.7, 0.9)], 2).unwrap();
    let tree = BoundedTree::from_parents(&inst, 0, None, vec![None, Some(0)]).unwrap();
    let svg = svg_string(&tree, &inst);
    let doc = roxmltree::Document::parse(&svg).unwrap();
    let count = |tag: &str| doc.descendants().filter(|n| n.has_tag_name(tag)).count();
    assert_eq!(count("line"), 1);
    assert_eq!(count("circle") + doc.descendants().filter(|n| n.attribute("class") == Some("center")).count(), 2);
    assert_eq!(edge_colors(&svg).len(), 1);
}

#[test]
fn one_color_per_level() {
    for r in reports(2, 40, 1) {
        let file = generate_file(2, 40, 1).unwrap();
        let inst = Instance::new(file.instance(r.nr).unwrap().to_vec(), r.hop_bound).unwrap();
        let svg = svg_string(&r.best_tree, &inst);
        assert_eq!(edge_colors(&svg).len(), r.best_tree.max_depth());
        assert!(edge_colors(&svg).iter().all(|c| PALETTE.contains(&c.as_str())));
    }
}

#[test]
fn drawings_are_written_under_their_names() {
    let rs = reports(1, 10, 1);
    let file = generate_file(1, 10, 1).unwrap();
    let dir = tempfile::tempdir().unwrap();
    for r in &rs {
        let inst = Instance::new(file.instance(r.nr).unwrap().to_vec(), r.hop_bound).unwrap();
        let path = dir.path().join(file_name(r.hop_bound, r.n, r.nr, r.algorithm.name()));
        render_svg(&r.best_tree, &inst, &path).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        roxmltree::Document::parse(&text).unwrap();
    }
    assert!(dir.path().join("4_10_1_VNS.svg").exists());
    assert!(dir.path().join("4_10_1_ACO.svg").exists());
}
