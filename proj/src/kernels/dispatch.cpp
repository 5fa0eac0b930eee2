#include <cstdlib>
#include <stdexcept>
#include <string>

#include "fcarel/kernels.hpp"

namespace fcarel::kernels {

namespace {

constexpr KernelTable kScalarTable{
    scalar::and_into, scalar::and_inplace, scalar::is_subset, scalar::equal,
    scalar::intersects, scalar::popcount, scalar::and_popcount,
};

#if FCAREL_HAVE_AVX2_KERNELS
constexpr KernelTable kAvx2Table{
    avx2::and_into, avx2::and_inplace, avx2::is_subset, avx2::equal,
    avx2::intersects, avx2::popcount, avx2::and_popcount,
};
#endif

Backend pick_default() {
    if (const char* forced = std::getenv("FCAREL_KERNELS")) {
        const std::string value(forced);
        if (value == "scalar") return Backend::Scalar;
        if (value == "avx2" && backend_available(Backend::Avx2)) return Backend::Avx2;
    }
    return backend_available(Backend::Avx2) ? Backend::Avx2 : Backend::Scalar;
}

struct ActiveState {
    Backend backend;
    const KernelTable* table;
};

ActiveState& state() {
    static ActiveState s = [] {
        const Backend b = pick_default();
        return ActiveState{b, &table_for(b)};
    }();
    return s;
}

}  // namespace

bool backend_available(Backend backend) {
    switch (backend) {
        case Backend::Scalar:
            return true;
        case Backend::Avx2:
#if FCAREL_HAVE_AVX2_KERNELS && (defined(__GNUC__) || defined(__clang__))
            return __builtin_cpu_supports("avx2") != 0;
#else
            return false;
#endif
    }
    return false;
}

const KernelTable& table_for(Backend backend) {
#if FCAREL_HAVE_AVX2_KERNELS
    if (backend == Backend::Avx2) return kAvx2Table;
#endif
    if (backend != Backend::Scalar) throw std::invalid_argument("kernel backend not compiled in");
    return kScalarTable;
}

const KernelTable& active() { return *state().table; }

Backend active_backend() { return state().backend; }

void set_backend(Backend backend) {
    if (!backend_available(backend)) {
        throw std::invalid_argument("kernel backend " + std::string(backend_name(backend)) + " unavailable on this CPU");
    }
    state() = ActiveState{backend, &table_for(backend)};
}

std::string_view backend_name(Backend backend) {
    switch (backend) {
        case Backend::Scalar:
            return "scalar";
        case Backend::Avx2:
            return "avx2";
    }
    return "unknown";
}

}  // namespace fcarel::kernels
