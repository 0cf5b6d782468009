//! Globally adaptive 21-point Gauss–Kronrod quadrature for complex-valued
//! integrands on a finite interval.

use num_complex::Complex64;

use crate::error::{Error, Result};

const KRONROD_NODES: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

const KRONROD_WEIGHTS: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_208_208_416_720,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

/// Weights of the embedded 10-point Gauss rule, on the odd Kronrod nodes.
const GAUSS_WEIGHTS: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

#[derive(Debug, Clone, Copy)]
struct Panel {
    lo: f64,
    hi: f64,
    value: Complex64,
    error: f64,
}

fn gauss_kronrod<F: Fn(f64) -> Complex64>(f: &F, lo: f64, hi: f64) -> Panel {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let mid = f(center);
    let mut kronrod = mid * KRONROD_WEIGHTS[10];
    let mut gauss = Complex64::new(0.0, 0.0);
    for (j, (&node, &weight)) in KRONROD_NODES[..10]
        .iter()
        .zip(&KRONROD_WEIGHTS[..10])
        .enumerate()
    {
        let dx = half * node;
        let pair = f(center - dx) + f(center + dx);
        kronrod += pair * weight;
        if j % 2 == 1 {
            gauss += pair * GAUSS_WEIGHTS[j / 2];
        }
    }
    Panel {
        lo,
        hi,
        value: kronrod * half,
        error: ((kronrod - gauss) * half).norm(),
    }
}

/// ∫_lo^hi f(t) dt to max(abs_tol, rel_tol·|I|), bisecting the worst panel
/// until the summed error estimate meets the target.
pub(crate) fn integrate<F: Fn(f64) -> Complex64>(
    f: F,
    lo: f64,
    hi: f64,
    abs_tol: f64,
    rel_tol: f64,
    max_subdivisions: usize,
) -> Result<Complex64> {
    let mut panels = vec![gauss_kronrod(&f, lo, hi)];
    let mut subdivisions = 0;
    loop {
        let value: Complex64 = panels.iter().map(|p| p.value).sum();
        let error: f64 = panels.iter().map(|p| p.error).sum();
        if error <= abs_tol.max(rel_tol * value.norm()) {
            return Ok(value);
        }
        if subdivisions >= max_subdivisions {
            return Err(Error::NoConvergence {
                subdivisions,
                estimate: error,
            });
        }
        let worst = panels
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.error.total_cmp(&b.1.error))
            .map(|(i, _)| i)
            .expect("at least one panel");
        let p = panels.swap_remove(worst);
        let mid = 0.5 * (p.lo + p.hi);
        panels.push(gauss_kronrod(&f, p.lo, mid));
        panels.push(gauss_kronrod(&f, mid, p.hi));
        subdivisions += 1;
    }
}
