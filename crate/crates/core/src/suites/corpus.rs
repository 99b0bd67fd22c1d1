//! Fixed inputs of the suites. Type variables are listed outermost first.

/// Type variable names, outermost first.
pub type Names = &'static [&'static str];
/// Term variables with their types.
pub type Bindings = &'static [(&'static str, &'static str)];

/// Closed types checked for identity extension.
pub const CLOSED_TYPES: &[&str] = &[
    "Unit",
    "Unit -> Unit",
    "forall X. X -> X",
    "forall X. X -> X -> X",
    "forall X. (X -> X) -> X",
    "forall X. (X -> X) -> X -> X",
    "forall X. (Unit -> X) -> X",
    "forall X. forall Y. X -> Y -> X",
    "(forall X. X -> X) -> forall X. X -> X",
    "forall Y. (forall X. (X -> X) -> X -> Y) -> Y",
    "forall X. ((forall Y. Y -> Y -> Y) -> X) -> X",
    "forall X. (X -> Unit) -> X -> Unit",
];

/// Types in one free variable `X`.
pub const OPEN_TYPES: &[&str] = &[
    "X",
    "Unit",
    "X -> X",
    "Unit -> X",
    "X -> Unit",
    "(X -> Unit) -> Unit",
    "(X -> X) -> X",
    "forall Y. (X -> Y) -> Y",
    "forall Y. Y -> X",
    "forall Y. (X -> Y) -> Y -> Y",
];

/// Functors for the graph suite; the ones with negative occurrences of `X`
/// are reported as skipped.
pub const GRAPH_FUNCTORS: &[&str] = &[
    "X",
    "Unit",
    "Unit -> X",
    "(X -> Unit) -> Unit",
    "forall Y. (X -> Y) -> Y",
    "forall Y. Y -> X",
    "forall Y. (X -> Y) -> Y -> Y",
    "X -> X",
];

/// `(name, F X, |Z|, |Z'|)` with the sizes expected over carriers of size at
/// most 2 with the empty set.
pub const ALGEBRAS: &[(&str, &str, u32, u32)] = &[
    ("Unit", "Unit", 1, 1),
    ("Church Bool", "forall Y. Y -> Y -> Y", 2, 2),
    ("X", "X", 0, 1),
];

/// `(closed type, expected number of elements)` over carriers of size at
/// most 2 with the empty set.
pub const FREE_THEOREMS: &[(&str, u32)] = &[
    ("forall X. X -> X", 1),
    ("forall X. X -> X -> X", 2),
    ("forall X. (X -> X) -> X", 0),
];

/// `(context, T, S)`: `T` has the extra innermost variable `X` that `S`
/// replaces.
pub const SUBSTITUTIONS: &[(Names, &str, &str)] = &[
    (&[], "X -> X", "Unit"),
    (&[], "X -> X", "forall Y. Y -> Y"),
    (&[], "X", "forall Y. Y -> Y -> Y"),
    (&[], "Unit", "Unit -> Unit"),
    (&[], "forall Y. X -> Y -> X", "Unit -> Unit"),
    (&[], "forall Y. (X -> Y) -> Y", "Unit"),
    (&[], "(X -> Unit) -> X", "forall Y. Y -> Y -> Y"),
    (&["Z"], "X -> Z", "Z -> Z"),
    (&["Z"], "X -> X", "Z -> Unit"),
    (&["Z"], "forall Y. (X -> Y) -> Z", "Z"),
    (&["Z"], "Z -> X", "forall Y. Y -> Z"),
    (&["Z"], "forall Y. Y -> X", "Z"),
];

/// `(type context, term context, s, t)` with `s =βη t`.
pub const BETA_ETA: &[(Names, Bindings, &str, &str)] = &[
    (&[], &[], "(\\x:Unit. x) unit", "unit"),
    (&[], &[], "/\\X. \\x:X. (\\y:X. y) x", "/\\X. \\x:X. x"),
    (&[], &[], "(/\\X. \\x:X. x) [forall Y. Y -> Y] (/\\Y. \\y:Y. y)", "/\\Y. \\y:Y. y"),
    (&["X"], &[("f", "X -> X")], "\\x:X. f x", "f"),
    (&[], &[("g", "forall Y. Y -> Y")], "/\\Y. g [Y]", "g"),
    (
        &[],
        &[],
        "/\\X. \\t:X. \\f:X. (/\\Y. \\a:Y. \\b:Y. a) [X] t f",
        "/\\X. \\t:X. \\f:X. t",
    ),
    (&[], &[], "(\\f:Unit -> Unit. f unit) (\\x:Unit. x)", "unit"),
    (
        &[],
        &[],
        "/\\X. \\s:X -> X. \\z:X. (\\g:X -> X. g (g z)) s",
        "/\\X. \\s:X -> X. \\z:X. s (s z)",
    ),
    (&["X"], &[("x", "X"), ("y", "X")], "(\\a:X. \\b:X. b) x y", "y"),
    (
        &[],
        &[],
        "/\\X. /\\Y. \\x:X. \\y:Y. (\\z:X. z) x",
        "/\\X. /\\Y. \\x:X. \\y:Y. x",
    ),
    (
        &[],
        &[],
        "(/\\X. \\f:X -> X. \\x:X. f x) [Unit]",
        "\\f:Unit -> Unit. \\x:Unit. f x",
    ),
    (
        &[],
        &[],
        "/\\X. \\f:X -> Unit -> X. \\a:X. f a",
        "/\\X. \\f:X -> Unit -> X. f",
    ),
];

/// `(type context, term context, term)` checked for naturality.
pub const TERMS: &[(Names, Bindings, &str)] = &[
    (&[], &[], "unit"),
    (&[], &[], "\\x:Unit. x"),
    (&[], &[], "/\\X. \\x:X. x"),
    (&[], &[], "/\\X. \\x:X. \\y:X. x"),
    (&[], &[], "/\\X. \\x:X. \\y:X. y"),
    (&[], &[], "/\\X. \\f:X -> X. \\x:X. f (f x)"),
    (&[], &[], "/\\X. /\\Y. \\x:X. \\y:Y. x"),
    (&[], &[], "(/\\X. \\x:X. x) [forall X. X -> X] (/\\X. \\x:X. x)"),
    (&["X"], &[("x", "X")], "x"),
    (&["X"], &[("f", "X -> X"), ("x", "X")], "f (f x)"),
    (&["X", "Y"], &[("f", "X -> Y"), ("x", "X")], "f x"),
    (&["X"], &[("x", "X")], "(/\\Y. \\y:Y. y) [X] x"),
    (&["X"], &[("g", "forall Y. Y -> X"), ("x", "X")], "g [Unit -> X] (\\z:Unit. x)"),
    (&["X"], &[("x", "X")], "/\\Y. \\k:X -> Y. k x"),
];
