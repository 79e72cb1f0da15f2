// SPDX-License-Identifier: Apache-2.0

//! Holds the `acceptance` test target, which checks the library and the
//! `edcolor` binary end to end. Run it with `cargo test -p edcolor-suite`.
