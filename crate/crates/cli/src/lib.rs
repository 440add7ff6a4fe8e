//! Parser, printer and command surface for the catkit specification language.

pub mod commands;
pub mod print;
pub mod report;
pub mod syntax;
pub mod workspace;

pub use commands::{run, Outcome};
pub use print::{print_decl, print_document};
pub use report::{Finding, Report, Status};
pub use syntax::{parse, Decl, Document, ParseError, ParseErrorKind, SourceSpan};
pub use workspace::{LoadError, Workspace};
