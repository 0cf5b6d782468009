//! Printed erf values at the seventeen comparison points: real parts in
//! `TABLE_1`, imaginary parts in `TABLE_2`, each with the rational column,
//! the reference column and the printed relative difference.

#![allow(dead_code)]

#[derive(Debug, Clone, Copy)]
pub struct PrintedRow {
    pub x: f64,
    pub y: f64,
    pub rational: &'static str,
    pub reference: &'static str,
    pub delta: &'static str,
}

pub const TABLE_1: [PrintedRow; 17] = [
    PrintedRow {
        x: 10.0,
        y: 10.0,
        rational: "9.616493742724747E-1",
        reference: "9.616493742724749E-1",
        delta: "2.3090E-16",
    },
    PrintedRow {
        x: 10.0,
        y: 5.0,
        rational: "1.000000000000000E0",
        reference: "1.000000000000000E0",
        delta: "0",
    },
    PrintedRow {
        x: 5.0,
        y: 5.0,
        rational: "9.303796037430947E-1",
        reference: "9.303796037430951E-1",
        delta: "4.7732E-16",
    },
    PrintedRow {
        x: 5.0,
        y: 1.0,
        rational: "1.000000000002960E0",
        reference: "1.000000000002960E0",
        delta: "0",
    },
    PrintedRow {
        x: 1.0,
        y: 1.0,
        rational: "1.316151281697949E0",
        reference: "1.316151281697948E0",
        delta: "6.7483E-16",
    },
    PrintedRow {
        x: 1.0,
        y: 0.5,
        rational: "9.507097283189570E-1",
        reference: "9.507097283189572E-1",
        delta: "2.3356E-16",
    },
    PrintedRow {
        x: 0.5,
        y: 0.5,
        rational: "6.426129148548198E-1",
        reference: "6.426129148548205E-1",
        delta: "1.2094E-15",
    },
    PrintedRow {
        x: 0.5,
        y: 0.1,
        rational: "5.249121488205361E-1",
        reference: "5.249121488205371E-1",
        delta: "1.9036E-15",
    },
    PrintedRow {
        x: 0.1,
        y: 0.1,
        rational: "1.135856345618654E-1",
        reference: "1.135856345618664E-1",
        delta: "8.7969E-15",
    },
    PrintedRow {
        x: 0.1,
        y: 0.05,
        rational: "1.127425509896926E-1",
        reference: "1.127425509896922E-1",
        delta: "2.9542E-15",
    },
    PrintedRow {
        x: 0.05,
        y: 0.05,
        rational: "5.651284873688534E-2",
        reference: "5.651284873688744E-2",
        delta: "3.7326E-14",
    },
    PrintedRow {
        x: 0.05,
        y: 0.01,
        rational: "5.637760588665819E-2",
        reference: "5.637760588665963E-2",
        delta: "2.5600E-14",
    },
    PrintedRow {
        x: 0.01,
        y: 0.01,
        rational: "1.128454387859423E-2",
        reference: "1.128454387859545E-2",
        delta: "1.0822E-13",
    },
    PrintedRow {
        x: 0.01,
        y: 0.005,
        rational: "1.128369762595771E-2",
        reference: "1.128369762595882E-2",
        delta: "9.8392E-14",
    },
    PrintedRow {
        x: 0.005,
        y: 0.005,
        rational: "5.641989865663000E-3",
        reference: "5.641989865664443E-3",
        delta: "2.5581E-13",
    },
    PrintedRow {
        x: 0.005,
        y: 0.001,
        rational: "5.641854461787554E-3",
        reference: "5.641854461787776E-3",
        delta: "3.9357E-14",
    },
    PrintedRow {
        x: 0.001,
        y: 0.001,
        rational: "1.128379919345890E-3",
        reference: "1.128379919343114E-3",
        delta: "2.4598E-12",
    },
];

pub const TABLE_2: [PrintedRow; 17] = [
    PrintedRow {
        x: 10.0,
        y: 10.0,
        rational: "-1.098768460819404E-2",
        reference: "-1.098768460819399E-2",
        delta: "4.2627E-15",
    },
    PrintedRow {
        x: 10.0,
        y: 5.0,
        rational: "-9.495949264558077E-36",
        reference: "-9.495949264558098E-36",
        delta: "2.2517E-15",
    },
    PrintedRow {
        x: 5.0,
        y: 5.0,
        rational: "3.893619089512146E-2",
        reference: "3.893619089512138E-2",
        delta: "2.1385E-15",
    },
    PrintedRow {
        x: 5.0,
        y: 1.0,
        rational: "-2.846018382085604E-12",
        reference: "-2.846018382085594E-12",
        delta: "3.5479E-15",
    },
    PrintedRow {
        x: 1.0,
        y: 1.0,
        rational: "1.904534692378354E-1",
        reference: "1.904534692378347E-1",
        delta: "3.2062E-15",
    },
    PrintedRow {
        x: 1.0,
        y: 0.5,
        rational: "1.879734672233839E-1",
        reference: "1.879734672233833E-1",
        delta: "3.2485E-15",
    },
    PrintedRow {
        x: 0.5,
        y: 0.5,
        rational: "4.578813944351928E-1",
        reference: "4.578813944351922E-1",
        delta: "1.4548E-15",
    },
    PrintedRow {
        x: 0.5,
        y: 0.1,
        rational: "8.802479434588868E-2",
        reference: "8.802479434588850E-2",
        delta: "2.0496E-15",
    },
    PrintedRow {
        x: 0.1,
        y: 0.1,
        rational: "1.120811719910652E-1",
        reference: "1.120811719910650E-1",
        delta: "1.9811E-15",
    },
    PrintedRow {
        x: 0.1,
        y: 0.05,
        rational: "5.590323090214489E-2",
        reference: "5.590323090214489E-2",
        delta: "0",
    },
    PrintedRow {
        x: 0.05,
        y: 0.05,
        rational: "5.632478587819852E-2",
        reference: "5.632478587819856E-2",
        delta: "6.1597E-16",
    },
    PrintedRow {
        x: 0.05,
        y: 0.01,
        rational: "1.125599074671486E-2",
        reference: "1.125599074671481E-2",
        delta: "5.2399E-15",
    },
    PrintedRow {
        x: 0.01,
        y: 0.01,
        rational: "1.128303937304405E-2",
        reference: "1.128303937304429E-2",
        delta: "2.1832E-14",
    },
    PrintedRow {
        x: 0.01,
        y: 0.005,
        rational: "5.641378676150062E-3",
        reference: "5.641378676150111E-3",
        delta: "8.7637E-15",
    },
    PrintedRow {
        x: 0.005,
        y: 0.005,
        rational: "5.641801802469853E-3",
        reference: "5.641801802469647E-3",
        delta: "3.6436E-14",
    },
    PrintedRow {
        x: 0.005,
        y: 0.001,
        rational: "1.128351334067245E-3",
        reference: "1.128351334067475E-3",
        delta: "2.0351E-13",
    },
    PrintedRow {
        x: 0.001,
        y: 0.001,
        rational: "1.128378414842284E-3",
        reference: "1.128378414846887E-3",
        delta: "4.0794E-12",
    },
];

/// Two units in the sixteenth significant digit of a printed decimal.
pub fn digit_tolerance(printed: &str) -> f64 {
    let (_, exp) = printed.split_once('E').expect("scientific notation");
    let exp: i32 = exp.parse().expect("integer exponent");
    2.0 * 10f64.powi(exp - 15)
}

/// Distance from `got` to the printed decimal in units of its sixteenth
/// significant digit.
pub fn digit_units(got: f64, printed: &str) -> f64 {
    let want: f64 = printed.parse().expect("printed value");
    (got - want).abs() / (digit_tolerance(printed) / 2.0)
}

/// Distance in units in the last place between two doubles of equal sign.
pub fn ulps(a: f64, b: f64) -> u64 {
    if a == b {
        return 0;
    }
    if a.is_sign_negative() != b.is_sign_negative() {
        return u64::MAX;
    }
    a.to_bits().abs_diff(b.to_bits())
}
