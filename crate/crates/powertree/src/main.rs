use std::fs;
use std::process::ExitCode;

use powertree::bench::run_benchmark;
use powertree::config::{load_config, Source};
use powertree::ingest::{generate_file, InstanceFile};
use powertree::report::{emit_csv, emit_table};
use powertree::svg::{file_name, render_svg};
use powertree::{Error, Result};
use powertree_core::Instance;

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(Error::Cli(e)) => {
            // Help and version requests also arrive here.
            let _ = e.print();
            if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run() -> Result<()> {
    let config = load_config(std::env::args_os())?;
    let file = match config.source.as_ref().ok_or(Error::NoSource)? {
        Source::File(path) => InstanceFile::read(path)?,
        Source::Generated { n, count, seed } => generate_file(*count, *n, *seed)?,
    };
    if file.outside_unit_square > 0 {
        eprintln!(
            "warning: {} points lie outside the unit square",
            file.outside_unit_square
        );
    }
    let reports = run_benchmark(&config, &file)?;
    print!("{}", emit_table(&reports));
    if let Some(out) = &config.out {
        emit_csv(&reports, out)?;
    }
    if let Some(dir) = &config.svg {
        fs::create_dir_all(dir).map_err(|e| Error::Io {
            path: dir.clone(),
            source: e,
        })?;
        for r in &reports {
            let inst = Instance::new(file.instance(r.nr)?.to_vec(), r.hop_bound)?;
            let name = file_name(r.hop_bound, r.n, r.nr, r.algorithm.name());
            render_svg(&r.best_tree, &inst, dir.join(name))?;
        }
    }
    Ok(())
}
