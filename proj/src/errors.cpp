#include "pdmd/errors.hpp"

#include <cstdio>

namespace pdmd {

namespace {

void default_handler(const std::string& message) {
    std::fprintf(stderr, "pdmd warning: %s\n", message.c_str());
}

WarningHandler g_handler = &default_handler;

}  // namespace

void set_warning_handler(WarningHandler handler) {
    g_handler = handler;
}

void warn(const std::string& message) {
    WarningHandler handler = g_handler;
    if (handler) handler(message);
}

}  // namespace pdmd
