#pragma once

// Regression suite behind `qcb selftest`: published reference values for the
// catalog states and the closed-form family curves. Returns 0 when every
// check passes, 1 otherwise; prints one table row per check.
int run_selftest();
