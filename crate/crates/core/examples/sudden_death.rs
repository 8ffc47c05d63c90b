//! Locate entanglement sudden death and rebirth for both channels.

use std::f64::consts::{FRAC_PI_4, FRAC_PI_8};

use rindler_ghz::analysis::{find_esd, TangleSelector};
use rindler_ghz::channels::ChannelKind;

fn main() -> rindler_ghz::Result<()> {
    for kind in ChannelKind::ALL {
        for r in [0.0, FRAC_PI_8, FRAC_PI_4] {
            for sel in [TangleSelector::OneA, TangleSelector::Pi] {
                let res = find_esd(kind, r, sel)?;
                print!("{kind:<14} r={r:.4} {:<10} p_star={:.9}", sel.label(), res.p_star);
                match (res.rebound, res.death_center()) {
                    (Some(rb), Some(c)) => {
                        println!(
                            "  rebirth at {:.9} (peak {:.4}), death centered at {c:.9}",
                            rb.onset, rb.peak
                        )
                    }
                    _ => println!("  no rebirth"),
                }
            }
        }
    }
    Ok(())
}
