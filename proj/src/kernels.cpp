#include "trm/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace trm::kern {

#if defined(TRM_HAVE_AVX2)
const Ops* avx2_ops_table();  // defined in kernels_avx2.cpp
#endif

namespace {

bool cpu_has_avx2() {
#if defined(TRM_HAVE_AVX2) && defined(__GNUC__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const Ops* pick_default() {
    if (const char* env = std::getenv("TRM_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return &scalar_ops();
#if defined(TRM_HAVE_AVX2)
        if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) return avx2_ops_table();
#endif
    }
#if defined(TRM_HAVE_AVX2)
    if (cpu_has_avx2()) return avx2_ops_table();
#endif
    return &scalar_ops();
}

std::atomic<const Ops*> g_active{nullptr};

const Ops* active_table() {
    const Ops* t = g_active.load(std::memory_order_acquire);
    if (!t) {
        t = pick_default();
        g_active.store(t, std::memory_order_release);
    }
    return t;
}

}  // namespace

bool backend_available(Backend b) {
    switch (b) {
        case Backend::scalar: return true;
        case Backend::avx2: return cpu_has_avx2();
    }
    return false;
}

void set_backend(Backend b) {
    if (!backend_available(b)) throw std::invalid_argument("kernel backend unavailable");
    if (b == Backend::scalar) {
        g_active.store(&scalar_ops(), std::memory_order_release);
        return;
    }
#if defined(TRM_HAVE_AVX2)
    g_active.store(avx2_ops_table(), std::memory_order_release);
#endif
}

Backend active_backend() {
    return active_table() == &scalar_ops() ? Backend::scalar : Backend::avx2;
}

const Ops& ops() { return *active_table(); }

}  // namespace trm::kern
