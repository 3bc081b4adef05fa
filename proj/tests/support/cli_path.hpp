#pragma once

#include <string>

// Path to the built CLI binary, handed to the test runner as --cli=<path>.
extern std::string g_latnorm_cli_path;
