//! Regenerates `tests/fixtures/erf_oracle.txt`, the cached oracle values of
//! erf used by the fixture tests.
//!
//! cargo run -p cerf-core --release --example gen_fixtures [path]

use std::path::PathBuf;

use cerf_core::analysis::TABLE_POINTS;
use cerf_core::oracle::{erf_oracle, write_fixtures, FixtureRecord, QuadratureSpec};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 2013;
const RANDOM_POINTS: usize = 64;

fn main() -> cerf_core::Result<()> {
    let path = std::env::args_os()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| {
            PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/erf_oracle.txt")
        });
    let spec = QuadratureSpec::default();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut points = TABLE_POINTS.to_vec();
    points.extend((0..RANDOM_POINTS).map(|_| (rng.gen_range(1e-3..6.0), rng.gen_range(1e-3..6.0))));

    let records = points
        .into_iter()
        .map(|(x, y)| {
            let v = erf_oracle(Complex64::new(x, y), &spec)?;
            Ok(FixtureRecord {
                x,
                y,
                re: v.value.re,
                im: v.value.im,
                source: v.source,
            })
        })
        .collect::<cerf_core::Result<Vec<_>>>()?;
    let header = format!(
        "erf(x + iy) from the series (|z| <= 4) and quadrature oracles\n\
         points: the 17 comparison points, then {RANDOM_POINTS} uniform in [1e-3, 6]^2 (ChaCha8, seed {SEED})"
    );
    write_fixtures(&path, &header, &records)?;
    println!("wrote {} records to {}", records.len(), path.display());
    Ok(())
}
