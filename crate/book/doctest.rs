// Chapters are included in lib form below so the book examples run
// under `cargo test --doc -p redux-book`.
