//! CSV and JSON emission. Floats are written like C's `%.17g`, which
//! round-trips every `f64`.

use std::io::Write;

use serde::Serialize;
use serde_json::value::RawValue;

use super::{SweepRow, ThresholdEstimate};

pub const CSV_HEADER: [&str; 14] = [
    "n",
    "r",
    "c",
    "profile_kind",
    "a",
    "p_vector",
    "replicates",
    "successes",
    "phat",
    "wilson_lo",
    "wilson_hi",
    "mean_rounds",
    "mean_max_cluster_subfinal",
    "wall_time_s",
];

/// `x` with 17 significant digits in `%g` style: fixed notation for
/// exponents in `-4..17`, scientific otherwise, trailing zeros removed.
pub fn format_float(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    let sci = format!("{:.16e}", x.abs());
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    let sign = if x < 0.0 { "-" } else { "" };
    if !(-4..17).contains(&exp) {
        let m = strip_zeros(mantissa);
        let esign = if exp < 0 { '-' } else { '+' };
        return format!("{sign}{m}e{esign}{:02}", exp.abs());
    }
    let fixed = if exp >= 0 {
        let (int, frac) = digits.split_at(exp as usize + 1);
        format!("{int}.{frac}")
    } else {
        format!("0.{}{digits}", "0".repeat((-exp - 1) as usize))
    };
    format!("{sign}{}", strip_zeros(&fixed))
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn p_vector_field(row: &SweepRow) -> String {
    if row.feasible {
        row.p_vector.iter().map(|&p| format_float(p)).collect::<Vec<_>>().join(";")
    } else {
        "infeasible".into()
    }
}

fn csv_record(row: &SweepRow) -> [String; 14] {
    [
        row.n.to_string(),
        row.r.to_string(),
        format_float(row.c),
        row.profile_kind.to_string(),
        format_float(row.a),
        p_vector_field(row),
        row.replicates.to_string(),
        row.successes.to_string(),
        format_float(row.phat),
        format_float(row.wilson_lo),
        format_float(row.wilson_hi),
        format_float(row.mean_rounds),
        format_float(row.mean_max_cluster_subfinal),
        format_float(row.wall_time_s),
    ]
}

pub fn write_csv<W: Write>(w: W, rows: &[SweepRow]) -> std::io::Result<()> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(CSV_HEADER)?;
    for row in rows {
        out.write_record(csv_record(row))?;
    }
    out.flush()
}

pub fn rows_to_csv(rows: &[SweepRow]) -> String {
    let mut buf = Vec::new();
    write_csv(&mut buf, rows).expect("writing to memory");
    String::from_utf8(buf).expect("CSV output is ASCII")
}

/// JSON number with 17 significant digits, or `null` when not finite.
fn number(x: f64) -> Box<RawValue> {
    let text = if x.is_finite() { format_float(x) } else { "null".into() };
    RawValue::from_string(text).expect("valid JSON number")
}

#[derive(Serialize)]
struct RowJson {
    n: usize,
    r: usize,
    c: Box<RawValue>,
    profile_kind: String,
    a: Box<RawValue>,
    p_vector: Option<Vec<Box<RawValue>>>,
    feasible: bool,
    replicates: u64,
    successes: u64,
    phat: Box<RawValue>,
    wilson_lo: Box<RawValue>,
    wilson_hi: Box<RawValue>,
    mean_rounds: Box<RawValue>,
    mean_max_cluster_subfinal: Box<RawValue>,
    wall_time_s: Box<RawValue>,
}

impl From<&SweepRow> for RowJson {
    fn from(row: &SweepRow) -> Self {
        RowJson {
            n: row.n,
            r: row.r,
            c: number(row.c),
            profile_kind: row.profile_kind.to_string(),
            a: number(row.a),
            p_vector: row.feasible.then(|| row.p_vector.iter().map(|&p| number(p)).collect()),
            feasible: row.feasible,
            replicates: row.replicates,
            successes: row.successes,
            phat: number(row.phat),
            wilson_lo: number(row.wilson_lo),
            wilson_hi: number(row.wilson_hi),
            mean_rounds: number(row.mean_rounds),
            mean_max_cluster_subfinal: number(row.mean_max_cluster_subfinal),
            wall_time_s: number(row.wall_time_s),
        }
    }
}

pub fn rows_to_json(rows: &[SweepRow]) -> String {
    let rows: Vec<RowJson> = rows.iter().map(RowJson::from).collect();
    serde_json::to_string_pretty(&rows).expect("serialisable rows")
}

#[derive(Serialize)]
struct ThresholdJson {
    n: usize,
    r: usize,
    profile_kind: String,
    a: Box<RawValue>,
    c_half: Box<RawValue>,
    c_lo: Box<RawValue>,
    c_hi: Box<RawValue>,
    replicates: u64,
    tolerance: Box<RawValue>,
    probes: Vec<RowJson>,
}

pub fn threshold_to_json(t: &ThresholdEstimate) -> String {
    let json = ThresholdJson {
        n: t.n,
        r: t.r,
        profile_kind: t.profile_kind.to_string(),
        a: number(t.a),
        c_half: number(t.c_half),
        c_lo: number(t.c_lo),
        c_hi: number(t.c_hi),
        replicates: t.replicates,
        tolerance: number(t.tolerance),
        probes: t.probes.iter().map(RowJson::from).collect(),
    };
    serde_json::to_string_pretty(&json).expect("serialisable estimate")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_printf_g17() {
        let cases = [
            (0.1, "0.10000000000000001"),
            (1.0, "1"),
            (4995.0, "4995"),
            (0.5, "0.5"),
            (1e-5, "1.0000000000000001e-05"),
            (0.0001, "0.0001"),
            (1e20, "1e+20"),
            (123_456_789_012_345_678.0, "1.2345678901234568e+17"),
            (12_345_678_901_234_567.0, "12345678901234568"),
            (-2.5, "-2.5"),
            (1.0 / 3.0, "0.33333333333333331"),
            (0.0, "0"),
            (f64::NAN, "nan"),
        ];
        for (x, want) in cases {
            assert_eq!(format_float(x), want, "{x}");
        }
    }

    #[test]
    fn floats_round_trip() {
        let mut rng = crate::rng::Seed(5).rng();
        for _ in 0..10_000 {
            let x = f64::from_bits(rng.next_u64());
            if x.is_finite() {
                assert_eq!(format_float(x).parse::<f64>().unwrap(), x);
            }
        }
    }
}
