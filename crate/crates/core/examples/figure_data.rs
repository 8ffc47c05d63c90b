//! Write the figure grids into a directory (default: current directory).

use std::path::PathBuf;

use rindler_ghz::analysis::{sweep, CouplingMode, SweepSpec};
use rindler_ghz::channels::ChannelKind;
use rindler_ghz::output::{records, to_csv, write_atomic};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    for (id, kind) in [(1, ChannelKind::PhaseDamping), (2, ChannelKind::PhaseFlip)] {
        for mode in [CouplingMode::LocalAlice, CouplingMode::Collective] {
            let rows = sweep(&SweepSpec::new(kind, mode))?;
            let path = dir.join(format!("fig{id}_{}.csv", mode.label().replace('-', "_")));
            write_atomic(&path, &to_csv(&records(&rows)))?;
            println!("{} ({} rows)", path.display(), rows.len());
        }
    }
    Ok(())
}
