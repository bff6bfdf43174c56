use cli::engine::symbolic_residual;
use expr_dsl::parse_identity;

#[test]
fn tens_li3_log_equals_li4() {
    let src = r#"
identity check.tens {
  vars: x;
  level: exact;
  expr: tens(Li(3)[x], log[x]) - Li(4)[x];
}
"#;
    let t = parse_identity(src).unwrap();
    let out = symbolic_residual(&t, 1_000_000).unwrap();
    assert!(out.residual.is_zero(), "residual {} terms:\n{}", out.residual.term_count(), out.residual);
}

#[test]
fn tens_log_li3_is_different() {
    let src = r#"
identity check.tens2 {
  vars: x;
  level: exact;
  expr: tens(log[x], Li(3)[x]) - Li(4)[x];
}
"#;
    let t = parse_identity(src).unwrap();
    let out = symbolic_residual(&t, 1_000_000).unwrap();
    assert!(!out.residual.is_zero());
}
