#![no_main]

use std::collections::BTreeSet;

use libfuzzer_sys::fuzz_target;
use monoreg::io::{
    parse_expression, parse_expression_with, render_function, ParseOptions, ParsedExpression,
};

/// Clauses as sets of signed variable names, independent of index order.
fn named(f: &ParsedExpression) -> BTreeSet<BTreeSet<(String, bool)>> {
    f.shape
        .clauses()
        .iter()
        .map(|c| {
            c.indices()
                .map(|k| (f.names[k - 1].clone(), f.ctx.sign(k).is_positive()))
                .collect()
        })
        .collect()
}

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(f) = parse_expression(text) {
        let rendered = render_function(&f.shape, &f.ctx, &f.names);
        let again = parse_expression(&rendered).expect("rendered expression parses");
        assert_eq!(named(&again), named(&f), "{text:?} -> {rendered:?}");
    }
    let _ = parse_expression_with(text, ParseOptions { normalize: true });
});
