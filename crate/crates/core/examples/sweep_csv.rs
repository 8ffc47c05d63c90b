//! Sweep p on the default r values and write the table as CSV to stdout.
//!
//!     cargo run --example sweep_csv -- phase-damping > sweep.csv

use rindler_ghz::analysis::{p_grid, sweep, CouplingMode, SweepSpec};
use rindler_ghz::channels::ChannelKind;
use rindler_ghz::output::{records, to_csv};

fn main() -> rindler_ghz::Result<()> {
    let kind = match std::env::args().nth(1).as_deref() {
        Some("phase-damping") => ChannelKind::PhaseDamping,
        _ => ChannelKind::PhaseFlip,
    };
    let spec = SweepSpec::new(kind, CouplingMode::Collective).with_p_values(p_grid(0.05)?);
    print!("{}", to_csv(&records(&sweep(&spec)?)));
    Ok(())
}
