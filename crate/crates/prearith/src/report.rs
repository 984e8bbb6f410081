//! Output shaping shared by the CLI and the examples.
//!
//! Two formats: human-oriented text, and machine-oriented `key=value`
//! lines in which free-form fields are double-quoted (backslash-escaped),
//! so a line always splits safely on unquoted spaces.

use crate::clamp::ExpansionResult;
use crate::config::ClassContext;
use crate::error::{Error, Result};
use crate::laws::LawReport;
use crate::scalar::{ExactScalar, ExtendedRational, ExtendedReal};
use crate::series::SeriesSpec;

/// Quotes a free-form field for a machine line.
pub fn quote(field: &str) -> String {
    let mut out = String::with_capacity(field.len() + 2);
    out.push('"');
    for c in field.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// One evaluation, rendered for machines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    pub class: String,
    pub magnitude: String,
    pub input: String,
    pub output: String,
    pub status: String,
}

impl Record {
    pub fn ok(ctx: &ClassContext, input: &str, output: &str) -> Self {
        Record {
            class: ctx.class().to_string(),
            magnitude: ctx.magnitude_string(),
            input: input.to_string(),
            output: output.to_string(),
            status: "ok".into(),
        }
    }

    pub fn error(ctx: &ClassContext, input: &str, err: &Error) -> Self {
        Record {
            class: ctx.class().to_string(),
            magnitude: ctx.magnitude_string(),
            input: input.to_string(),
            output: err.to_string(),
            status: "error".into(),
        }
    }

    pub fn machine_line(&self) -> String {
        format!(
            "class={} magnitude={} input={} output={} status={}",
            self.class,
            self.magnitude,
            quote(&self.input),
            quote(&self.output),
            self.status,
        )
    }
}

/// Machine rendering of one law-audit report.
pub fn law_machine_line(report: &LawReport) -> String {
    let mut line = format!(
        "class={} magnitude={} law={} samples={} violations={} seed={} status={}",
        report.class,
        report.magnitude,
        report.law,
        report.samples_checked,
        report.violations.len(),
        report.seed,
        if report.held() { "held" } else { "violated" },
    );
    if let Some(first) = report.violations.first() {
        line.push_str(" first=");
        line.push_str(&quote(&first.to_string()));
    }
    line
}

pub const SERIES_TABLE_HEADER: &str = "n,term,partial_sum,projected_partial";

/// One row of the series table; numbers are exact strings whenever the
/// series has exact terms, float strings otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesRow {
    pub n: usize,
    pub term: String,
    pub partial_sum: String,
    pub projected_partial: String,
}

impl SeriesRow {
    pub fn csv_line(&self) -> String {
        format!("{},{},{},{}", self.n, self.term, self.partial_sum, self.projected_partial)
    }
}

/// The first `rows` terms and partial sums of a series, each partial sum
/// projected into the class. Projection of a negative partial sum into
/// `[0, M]` is a domain error, matching the class' projector.
pub fn series_rows(
    series: &SeriesSpec,
    ctx: &ClassContext,
    rows: usize,
) -> Result<Vec<SeriesRow>> {
    if series.exact_term(1).is_some() {
        exact_rows(series, ctx, rows)
    } else {
        float_rows(series, ctx, rows)
    }
}

fn exact_rows(series: &SeriesSpec, ctx: &ClassContext, rows: usize) -> Result<Vec<SeriesRow>> {
    let mut out = Vec::with_capacity(rows);
    let mut partial = ExactScalar::zero();
    for n in 1..=rows {
        let term = series.exact_term(n).expect("exactness checked by caller");
        partial = partial + &term;
        let projected = project_exact(&partial, ctx)?;
        out.push(SeriesRow {
            n,
            term: term.to_string(),
            partial_sum: partial.to_string(),
            projected_partial: projected,
        });
    }
    Ok(out)
}

fn project_exact(partial: &ExactScalar, ctx: &ClassContext) -> Result<String> {
    match ctx {
        ClassContext::Am(m) => {
            let v = crate::clamp::am_coproject(&ExtendedRational::from(partial.clone()), m)?;
            Ok(v.to_string())
        }
        ClassContext::Amm(m) => {
            let v = crate::clamp::amm_coproject(&ExtendedRational::from(partial.clone()), m);
            Ok(v.to_string())
        }
        ClassContext::Bm(m) => {
            let v = crate::projective::bm_forward(ExtendedReal::from_f64(partial.to_f64()), *m);
            Ok(v.to_string())
        }
    }
}

fn float_rows(series: &SeriesSpec, ctx: &ClassContext, rows: usize) -> Result<Vec<SeriesRow>> {
    let m = ctx.magnitude_f64();
    let mut out = Vec::with_capacity(rows);
    let mut partial = 0.0f64;
    for (i, term) in series.float_terms().take(rows).enumerate() {
        partial += term;
        let projected = match ctx {
            ClassContext::Am(_) => {
                if partial < 0.0 {
                    return Err(Error::NegativeInput { value: partial.to_string() });
                }
                partial.min(m).to_string()
            }
            ClassContext::Amm(_) => partial.clamp(-m, m).to_string(),
            ClassContext::Bm(bm) => {
                crate::projective::bm_forward(ExtendedReal::from_f64(partial), *bm).to_string()
            }
        };
        out.push(SeriesRow {
            n: i + 1,
            term: term.to_string(),
            partial_sum: partial.to_string(),
            projected_partial: projected,
        });
    }
    Ok(out)
}

/// Full CSV table: header plus one line per row.
pub fn series_table(rows: &[SeriesRow]) -> String {
    let mut out = String::from(SERIES_TABLE_HEADER);
    for row in rows {
        out.push('\n');
        out.push_str(&row.csv_line());
    }
    out
}

/// Text rendering of a greedy expansion.
pub fn expansion_text(z: &ExactScalar, x: &ExactScalar, result: &ExpansionResult) -> String {
    let mut out = format!("greedy expansion of {z} in powers of {x}\n");
    for (i, count) in result.counts.iter().enumerate() {
        out.push_str(&format!("  stage {}: {count} * ({x})^{}\n", i + 1, i + 1));
    }
    out.push_str(&format!(
        "partial sum {} (gap to target at most {})",
        result.partial_sum, result.error_bound
    ));
    out
}

/// Machine rendering of a greedy expansion.
pub fn expansion_machine_line(
    ctx: &ClassContext,
    z: &ExactScalar,
    x: &ExactScalar,
    result: &ExpansionResult,
) -> String {
    let counts: Vec<String> = result.counts.iter().map(|c| c.to_string()).collect();
    format!(
        "class={} magnitude={} z={} x={} counts={} partial_sum={} error_bound={} status=ok",
        ctx.class(),
        ctx.magnitude_string(),
        z,
        x,
        counts.join(","),
        result.partial_sum,
        result.error_bound,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::ArithClass;
    use crate::series::SeriesKind;

    fn ctx(class: ArithClass, magnitude: &str) -> ClassContext {
        ClassContext::parse(class, magnitude).unwrap()
    }

    #[test]
    fn machine_line_quotes_free_fields() {
        let record = Record::ok(&ctx(ArithClass::Am, "5"), "2 + 3", "5");
        assert_eq!(
            record.machine_line(),
            r#"class=am magnitude=5 input="2 + 3" output="5" status=ok"#
        );
        assert_eq!(quote(r#"say "hi"\now"#), r#""say \"hi\"\\now""#);
    }

    #[test]
    fn geometric_table_reaches_fifteen_eighths() {
        let series = SeriesSpec::new(SeriesKind::Geometric {
            first: ExactScalar::one(),
            ratio: ExactScalar::ratio(1, 2),
        });
        let rows = series_rows(&series, &ctx(ArithClass::Am, "10"), 4).unwrap();
        let table = series_table(&rows);
        let lines: Vec<&str> = table.lines().collect();
        assert_eq!(lines[0], SERIES_TABLE_HEADER);
        assert_eq!(lines[1], "1,1,1,1");
        assert_eq!(lines[2], "2,1/2,3/2,3/2");
        assert_eq!(lines[3], "3,1/4,7/4,7/4");
        assert_eq!(lines[4], "4,1/8,15/8,15/8");
    }

    #[test]
    fn clamped_projection_caps_partial_sums() {
        let series = SeriesSpec::new(SeriesKind::Geometric {
            first: ExactScalar::from(2),
            ratio: ExactScalar::from(2),
        });
        let rows = series_rows(&series, &ctx(ArithClass::Am, "5"), 3).unwrap();
        // Partial sums 2, 6, 14 project to 2, 5, 5.
        let projected: Vec<&str> =
            rows.iter().map(|r| r.projected_partial.as_str()).collect();
        assert_eq!(projected, ["2", "5", "5"]);
        assert_eq!(rows[2].partial_sum, "14");
    }

    #[test]
    fn signed_projection_clamps_both_sides() {
        let series = SeriesSpec::new(SeriesKind::ExplicitList(vec![
            ExactScalar::from(4),
            ExactScalar::from(3),
            ExactScalar::from(-9),
            ExactScalar::from(-9),
        ]));
        let rows = series_rows(&series, &ctx(ArithClass::Amm, "5"), 4).unwrap();
        let projected: Vec<&str> =
            rows.iter().map(|r| r.projected_partial.as_str()).collect();
        // Partial sums 4, 7, -2, -11 clamp to 4, 5, -2, -5.
        assert_eq!(projected, ["4", "5", "-2", "-5"]);
    }

    #[test]
    fn negative_partial_in_unsigned_class_is_an_error() {
        let series = SeriesSpec::new(SeriesKind::ExplicitList(vec![ExactScalar::from(-1)]));
        let err = series_rows(&series, &ctx(ArithClass::Am, "5"), 1).unwrap_err();
        assert!(matches!(err, Error::NegativeInput { .. }));
    }

    #[test]
    fn non_integer_exponent_falls_back_to_floats() {
        let series = SeriesSpec::new(SeriesKind::PSeries {
            exponent: ExactScalar::ratio(1, 2),
        });
        let rows = series_rows(&series, &ctx(ArithClass::Am, "5"), 2).unwrap();
        assert_eq!(rows[0].term, "1");
        assert_eq!(rows[0].partial_sum, "1");
        // 1 + 1/sqrt(2), a float string.
        assert!(rows[1].partial_sum.starts_with("1.70710678"));
    }

    #[test]
    fn arctan_rows_project_through_the_generator() {
        let series = SeriesSpec::new(SeriesKind::ExplicitList(vec![ExactScalar::zero()]));
        let rows = series_rows(&series, &ctx(ArithClass::Bm, "4"), 1).unwrap();
        // Partial sum 0 lands on the midpoint M/2.
        assert_eq!(rows[0].projected_partial, "2");
    }

    #[test]
    fn expansion_renderings() {
        let z = ExactScalar::ratio(7, 10);
        let x = ExactScalar::ratio(1, 2);
        let m = crate::scalar::Magnitude::from_int(1).unwrap();
        let result = crate::clamp::greedy_expansion(&z, &x, 4, &m).unwrap();
        let text = expansion_text(&z, &x, &result);
        assert!(text.contains("stage 1: 1 * (1/2)^1"));
        assert!(text.contains("partial sum 11/16"));
        let line = expansion_machine_line(&ctx(ArithClass::Am, "1"), &z, &x, &result);
        assert!(line.contains("counts=1,0,1,1"));
        assert!(line.contains("error_bound=1/16"));
    }

    #[test]
    fn law_machine_line_includes_first_violation() {
        let reports = crate::laws::audit_laws(
            &ctx(ArithClass::Am, "2"),
            &[crate::laws::Law::LeftDistrib],
            0,
            0,
        )
        .unwrap();
        let line = law_machine_line(&reports[0]);
        assert!(line.starts_with("class=am magnitude=2 law=left-distrib"));
        assert!(line.contains("status=violated"));
        assert!(line.contains(" first=\"("));
    }
}
