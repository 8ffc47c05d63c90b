//! Build single-qubit and lifted Kraus sets and watch the GHZ coherence decay.

use rindler_ghz::channels::{apply, lift, ChannelKind, CouplingConfig};
use rindler_ghz::rindler::{ghz_rindler_density, AccelParam};

fn main() -> rindler_ghz::Result<()> {
    let r = AccelParam::new(0.4)?;
    let rho = ghz_rindler_density(r, r);
    for kind in ChannelKind::ALL {
        let single = kind.single_qubit(0.3)?;
        println!(
            "{kind}: {} operators, completeness defect {:.1e}",
            single.ops.len(),
            single.completeness_defect()
        );
        for (label, cfg) in [
            ("local-alice", CouplingConfig::local_alice(kind, 0.3)?),
            ("collective", CouplingConfig::collective(kind, 0.3)?),
        ] {
            let lifted = lift(&cfg)?;
            let out = apply(&cfg, &rho)?;
            println!(
                "  {label:<12} {} lifted operators, rho_07 {:.6} -> {:.6}",
                lifted.ops.len(),
                rho.matrix().get(0, 7).re,
                out.matrix().get(0, 7).re
            );
        }
    }
    Ok(())
}
