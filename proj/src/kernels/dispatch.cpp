#include <cstdlib>
#include <string>

#include "sdc/kernels.hpp"

namespace sdc::kernels {

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
    }
    return "unknown";
}

bool isa_supported(Isa isa) {
    switch (isa) {
        case Isa::scalar: return true;
        case Isa::avx2:
#if defined(__x86_64__) || defined(__i386__)
            return avx2::compiled() && __builtin_cpu_supports("avx2");
#else
            return false;
#endif
    }
    return false;
}

Isa best_isa() {
    if (const char* forced = std::getenv("SDC_FORCE_ISA"); forced && std::string(forced) == "scalar")
        return Isa::scalar;
    return isa_supported(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

const KernelTable& table(Isa isa) {
    static const KernelTable scalar_table{Isa::scalar, &scalar::min_weight, &scalar::histogram};
    static const KernelTable avx2_table{Isa::avx2, &avx2::min_weight, &avx2::histogram};
    if (isa == Isa::avx2 && isa_supported(Isa::avx2)) return avx2_table;
    return scalar_table;
}

}  // namespace sdc::kernels
