use powertree::config::*;
use powertree::Error;

fn load(args: &[&str]) -> powertree::Result<SolverConfig> {
    load_config(std::iter::once("powertree").chain(args.iter().copied()))
}

#[test]
fn defaults_are_the_tuned_values() {
    let c = load(&[]).unwrap();
    assert_eq!(c.vns.k_max, 30);
    assert_eq!(c.gls.pop_size, 75);
    assert_eq!(c.gls.offspring_size, 40);
    assert_eq!(c.gls.mutation_prob, 0.5);
    assert_eq!(c.gls.local_search_prob, 0.5);
    assert_eq!(c.aco.colony_size, 50);
    assert_eq!(c.aco.rho, 0.2);
    assert_eq!(c.runs, 10);
    assert_eq!(c.patience, 3);
    assert_eq!(c.algo, AlgoTag::All);
    assert_eq!(c.source, None);
    assert_eq!(c, SolverConfig::default());
}

#[test]
fn flags_override_defaults() {
    let c = load(&["--algo", "vns", "--d", "7"]).unwrap();
    assert_eq!(c.algo, AlgoTag::Vns);
    assert_eq!(c.algorithms(), &[Algorithm::Vns]);
    assert_eq!(c.hop_bound, 7);

    let c = load(&[
        "--file", "x.txt", "--nr", "2", "--runs", "4", "--seed", "17", "--kmax", "20", "--pop", "25",
        "--offsp", "15", "--pm", "0.25", "--pls", "0.75", "--colsize", "100", "--rho", "0.05",
        "--patience", "5", "--out", "r.csv", "--svg", "pics",
    ])
    .unwrap();
    assert_eq!(c.source, Some(Source::File("x.txt".into())));
    assert_eq!(c.nr, Some(2));
    assert_eq!((c.runs, c.seed, c.vns.k_max), (4, 17, 20));
    assert_eq!((c.gls.pop_size, c.gls.offspring_size), (25, 15));
    assert_eq!((c.gls.mutation_prob, c.gls.local_search_prob), (0.25, 0.75));
    assert_eq!((c.aco.colony_size, c.aco.rho), (100, 0.05));
    assert_eq!(c.patience, 5);
    assert_eq!(c.out.as_deref(), Some("r.csv".as_ref()));
    assert_eq!(c.svg.as_deref(), Some("pics".as_ref()));
}

#[test]
fn generated_source() {
    let c = load(&["--gen", "60", "--gen-count", "3", "--gen-seed", "8"]).unwrap();
    assert_eq!(
        c.source,
        Some(Source::Generated {
            n: 60,
            count: 3,
            seed: 8
        })
    );
    assert!(load(&["--gen", "60", "--file", "x"]).is_err());
    assert!(load(&["--gen-count", "3"]).is_err());
}

#[test]
fn out_of_range_values() {
    for args in [
        &["--rho", "1.5"][..],
        &["--rho", "0"],
        &["--rho", "1"],
        &["--pm=-0.1"],
        &["--pls", "1.01"],
        &["--runs", "0"],
        &["--kmax", "0"],
        &["--pop", "1"],
        &["--offsp", "0"],
        &["--colsize", "0"],
        &["--patience", "0"],
        &["--d", "0"],
        &["--nr", "0"],
        &["--gen", "1"],
    ] {
        assert!(
            matches!(load(args), Err(Error::OutOfRange { .. })),
            "{args:?}"
        );
    }
}

#[test]
fn unknown_or_malformed_flags() {
    assert!(matches!(load(&["--bogus"]), Err(Error::Cli(_))));
    assert!(matches!(load(&["--algo", "sa"]), Err(Error::Cli(_))));
    assert!(matches!(load(&["--runs", "many"]), Err(Error::Cli(_))));
}

#[test]
fn identical_arguments_identical_configs() {
    let args = ["--algo", "aco", "--rho", "0.1", "--seed", "3"];
    assert_eq!(load(&args).unwrap(), load(&args).unwrap());
}

#[test]
fn algorithm_names() {
    for a in Algorithm::ALL {
        assert_eq!(Algorithm::from_name(a.name()), Some(a));
    }
    assert_eq!(Algorithm::from_name("vns"), Some(Algorithm::Vns));
    assert_eq!(Algorithm::from_name("xyz"), None);
}
