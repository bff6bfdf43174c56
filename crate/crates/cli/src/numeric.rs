//! Dispatch of numeric corpus checks to the evaluator crate.

use crate::engine::EngineOpts;
use crate::report::{CheckReport, Verdict};
use corpus::NumericCheck;

pub fn run_numeric(
    which: NumericCheck,
    tolerance: f64,
    opts: &EngineOpts,
    mut report: CheckReport,
) -> CheckReport {
    let outcome = match which {
        NumericCheck::X333 => numeric_eval::checks::check_x333(opts.precision_digits, tolerance),
        NumericCheck::P2FiveTerm => {
            numeric_eval::checks::check_p2_five_term(opts.precision_digits, tolerance, 100, opts.seed)
        }
        NumericCheck::Cor13 => {
            numeric_eval::checks::check_cor13(opts.precision_digits, tolerance, 3, opts.seed)
        }
        NumericCheck::MainThm => {
            numeric_eval::checks::check_mainthm(opts.precision_digits, tolerance, opts.seed)
        }
        NumericCheck::Sigma9 => {
            numeric_eval::checks::check_sigma9(opts.precision_digits, tolerance, opts.seed)
        }
    };
    match outcome {
        Ok(note) => {
            report.verdict = Verdict::Pass;
            report.note = Some(note);
        }
        Err(e) => {
            report.verdict = Verdict::Fail;
            report.note = Some(e);
        }
    }
    report
}
