// SPDX-License-Identifier: Apache-2.0
#include "util/timeutil.hpp"

#include <cstdio>
#include <ctime>

namespace ami::util {

std::string rfc3339(Clock::time_point tp) {
    std::time_t t = Clock::to_time_t(tp);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", tm.tm_year + 1900,
                  tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec);
    return buf;
}

std::string rfc3339_now() { return rfc3339(Clock::now()); }

}  // namespace ami::util
