#include "evac/kernels.hpp"

#include <cstdlib>
#include <string>

#include "evac/common.hpp"

namespace evac::kern {

#ifdef EVAC_HAVE_AVX2
namespace detail {
const Ops& avx2_table();
}
#endif

const Ops* avx2_ops() {
#ifdef EVAC_HAVE_AVX2
    if (__builtin_cpu_supports("avx2")) return &detail::avx2_table();
#endif
    return nullptr;
}

namespace {

const Ops* initial_table() {
    const char* env = std::getenv("EVAC_KERNELS");
    std::string want = env ? env : "auto";
    if (want == "auto") {
        const Ops* v = avx2_ops();
        return v ? v : &scalar_ops();
    }
    if (want == "scalar") return &scalar_ops();
    if (want == "avx2") {
        const Ops* v = avx2_ops();
        require_config(v != nullptr,
                       "EVAC_KERNELS=avx2 but avx2 kernels are unavailable");
        return v;
    }
    throw ConfigError("EVAC_KERNELS must be auto, scalar or avx2, got \"" +
                      want + "\"");
}

const Ops*& current() {
    static const Ops* table = initial_table();
    return table;
}

}  // namespace

const Ops& ops() { return *current(); }

Backend active_backend() {
    return current() == &scalar_ops() ? Backend::scalar : Backend::avx2;
}

void select_backend(Backend b) {
    if (b == Backend::scalar) {
        current() = &scalar_ops();
        return;
    }
    const Ops* v = avx2_ops();
    require_config(v != nullptr, "avx2 kernels are unavailable on this machine");
    current() = v;
}

}  // namespace evac::kern
