//! Adaptive Gauss–Kronrod (G15/K31) integration with a global error heap.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::interval::Interval;

/// Default absolute tolerance of the reference integrator.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Maximum number of bisections before the integrator gives up.
pub const SUBDIVISION_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    /// Absolute, nonnegative.
    pub err_estimate: f64,
    pub subdivisions: usize,
}

#[allow(clippy::excessive_precision)]
const XGK: [f64; 16] = [
    0.998_002_298_693_397_060_285_172_840_152_271,
    0.987_992_518_020_485_428_489_565_718_586_613,
    0.967_739_075_679_139_134_257_347_978_784_337,
    0.937_273_392_400_705_904_307_758_947_710_209,
    0.897_264_532_344_081_900_882_509_656_454_496,
    0.848_206_583_410_427_216_200_648_320_774_217,
    0.790_418_501_442_465_932_967_649_294_817_947,
    0.724_417_731_360_170_047_416_186_054_613_938,
    0.650_996_741_297_416_970_533_735_895_313_275,
    0.570_972_172_608_538_847_537_226_737_253_911,
    0.485_081_863_640_239_680_693_655_740_232_351,
    0.394_151_347_077_563_369_897_207_370_981_045,
    0.299_180_007_153_168_812_166_780_024_266_389,
    0.201_194_093_997_434_522_300_628_303_394_596,
    0.101_142_066_918_717_499_027_074_231_447_392,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 8] = [
    0.030_753_241_996_117_268_354_628_393_577_204,
    0.070_366_047_488_108_124_709_267_416_450_667,
    0.107_159_220_467_171_935_011_869_546_685_869,
    0.139_570_677_926_154_314_447_804_794_511_028,
    0.166_269_205_816_993_933_553_200_860_481_209,
    0.186_161_000_015_562_211_026_800_561_866_423,
    0.198_431_485_327_111_576_456_118_326_443_839,
    0.202_578_241_925_561_272_880_620_199_967_519,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 16] = [
    0.005_377_479_872_923_348_987_792_051_430_128,
    0.015_007_947_329_316_122_538_374_763_075_807,
    0.025_460_847_326_715_320_186_874_001_019_653,
    0.035_346_360_791_375_846_222_037_948_478_360,
    0.044_589_751_324_764_876_608_227_299_373_280,
    0.053_481_524_690_928_087_265_343_147_239_430,
    0.062_009_567_800_670_640_285_139_230_960_803,
    0.069_854_121_318_728_258_709_520_077_099_147,
    0.076_849_680_757_720_378_894_432_777_482_659,
    0.083_080_502_823_133_021_038_289_247_286_104,
    0.088_564_443_056_211_770_647_275_443_693_774,
    0.093_126_598_170_825_321_225_486_872_747_346,
    0.096_642_726_983_623_678_505_179_907_627_589,
    0.099_173_598_721_791_959_332_393_173_484_603,
    0.100_769_845_523_875_595_044_946_662_617_570,
    0.101_330_007_014_791_549_017_374_792_767_493,
];

#[derive(Debug, Clone, Copy)]
struct Panel {
    lo: f64,
    hi: f64,
    value: f64,
    err: f64,
    /// Error cannot be reduced further by bisection (roundoff floor or no room to split).
    settled: bool,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err
            .total_cmp(&other.err)
            .then_with(|| other.lo.total_cmp(&self.lo))
    }
}

fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> (f64, f64) {
    let mut scaled = err.abs();
    if res_asc != 0.0 && scaled != 0.0 {
        let scale = (200.0 * scaled / res_asc).powf(1.5);
        scaled = if scale < 1.0 {
            res_asc * scale
        } else {
            res_asc
        };
    }
    let floor = 50.0 * f64::EPSILON * res_abs;
    (scaled.max(floor), floor)
}

fn gk31<F: Fn(f64) -> f64>(g: &F, lo: f64, hi: f64) -> Result<Panel> {
    let center = 0.5 * (lo + hi);
    let half_len = 0.5 * (hi - lo);
    let eval = |x: f64| -> Result<f64> {
        let v = g(x);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonFinite { x, value: v })
        }
    };

    let f_center = eval(center)?;
    // G15 includes the center node.
    let mut res_gauss = f_center * WG[7];
    let mut res_kronrod = f_center * WGK[15];
    let mut res_abs = res_kronrod.abs();
    let mut fv1 = [0.0; 15];
    let mut fv2 = [0.0; 15];

    for j in 0..15 {
        let x = half_len * XGK[j];
        let f1 = eval(center - x)?;
        let f2 = eval(center + x)?;
        fv1[j] = f1;
        fv2[j] = f2;
        // Odd indices are the embedded Gauss nodes.
        if j % 2 == 1 {
            res_gauss += WG[j / 2] * (f1 + f2);
        }
        res_kronrod += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
    }

    let mean = 0.5 * res_kronrod;
    let mut res_asc = WGK[15] * (f_center - mean).abs();
    for j in 0..15 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }

    let value = res_kronrod * half_len;
    let (err, floor) = rescale_error(
        (res_kronrod - res_gauss) * half_len,
        res_abs * half_len.abs(),
        res_asc * half_len.abs(),
    );
    let splittable = {
        let mid = 0.5 * (lo + hi);
        lo < mid && mid < hi
    };
    Ok(Panel {
        lo,
        hi,
        value,
        err,
        settled: err <= floor || !splittable,
    })
}

/// Integrates `g` over `domain` to absolute tolerance `tol`.
pub fn integrate<F: Fn(f64) -> f64>(g: F, domain: &Interval, tol: f64) -> Result<QuadratureResult> {
    integrate_with_breaks(g, domain, &[], tol)
}

/// Like [`integrate`], with the domain split beforehand at every break point
/// strictly inside it (kinks, narrow features).
pub fn integrate_with_breaks<F: Fn(f64) -> f64>(
    g: F,
    domain: &Interval,
    breaks: &[f64],
    tol: f64,
) -> Result<QuadratureResult> {
    integrate_budgeted(g, domain, breaks, tol, SUBDIVISION_BUDGET)
}

pub(crate) fn integrate_budgeted<F: Fn(f64) -> f64>(
    g: F,
    domain: &Interval,
    breaks: &[f64],
    tol: f64,
    budget: usize,
) -> Result<QuadratureResult> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidParameter {
            name: "tol",
            reason: format!("tolerance must be positive, got {tol}"),
        });
    }

    let mut cuts: Vec<f64> = breaks
        .iter()
        .copied()
        .filter(|x| x.is_finite() && *x > domain.lo() && *x < domain.hi())
        .collect();
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();
    let mut nodes = Vec::with_capacity(cuts.len() + 2);
    nodes.push(domain.lo());
    nodes.extend(cuts);
    nodes.push(domain.hi());

    let mut active = BinaryHeap::new();
    let mut settled = Vec::new();
    let mut total_err = 0.0;
    for w in nodes.windows(2) {
        let panel = gk31(&g, w[0], w[1])?;
        total_err += panel.err;
        if panel.settled {
            settled.push(panel);
        } else {
            active.push(panel);
        }
    }

    let mut subdivisions = 0;
    while total_err > tol {
        let Some(worst) = active.pop() else {
            break;
        };
        if subdivisions >= budget {
            active.push(worst);
            let partial = assemble(&settled, &active, subdivisions);
            return Err(Error::NonConvergence {
                subdivisions,
                partial,
            });
        }
        let mid = 0.5 * (worst.lo + worst.hi);
        let left = gk31(&g, worst.lo, mid)?;
        let right = gk31(&g, mid, worst.hi)?;
        subdivisions += 1;
        total_err += left.err + right.err - worst.err;
        for p in [left, right] {
            if p.settled {
                settled.push(p);
            } else {
                active.push(p);
            }
        }
        // Periodic resummation keeps the running total from drifting.
        if subdivisions % 64 == 0 {
            total_err = settled.iter().chain(active.iter()).map(|p| p.err).sum();
        }
    }

    Ok(assemble(&settled, &active, subdivisions))
}

fn assemble(
    settled: &[Panel],
    active: &BinaryHeap<Panel>,
    subdivisions: usize,
) -> QuadratureResult {
    let mut panels: Vec<&Panel> = settled.iter().chain(active.iter()).collect();
    panels.sort_by(|a, b| a.lo.total_cmp(&b.lo));
    // Neumaier summation in left-to-right order keeps results independent of heap layout.
    let mut sum = 0.0;
    let mut comp = 0.0;
    for p in &panels {
        let t = sum + p.value;
        if sum.abs() >= p.value.abs() {
            comp += (sum - t) + p.value;
        } else {
            comp += (p.value - t) + sum;
        }
        sum = t;
    }
    let err_estimate = panels.iter().map(|p| p.err).sum::<f64>();
    QuadratureResult {
        value: sum + comp,
        err_estimate,
        subdivisions,
    }
}
