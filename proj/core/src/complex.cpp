#include "nchodge/complex.hpp"

#include "nchodge/conjfield.hpp"

namespace nchodge {

template class Matrix<BigRational>;
template class Matrix<ConjElem>;
template class ChainComplex<BigRational>;
template class ChainComplex<ConjElem>;
template ChainComplex<BigRational> total(const Bicomplex<BigRational>&);
template ChainComplex<ConjElem> total(const Bicomplex<ConjElem>&);
template ChainComplex<BigRational> cone(const ChainMap<BigRational>&);
template ChainComplex<ConjElem> cone(const ChainMap<ConjElem>&);
template IotaResult<BigRational> iota_invariants(const ChainComplex<BigRational>&,
                                                 const SemilinearInvolution<BigRational>&);
template IotaResult<ConjElem> iota_invariants(const ChainComplex<ConjElem>&,
                                              const SemilinearInvolution<ConjElem>&);
template std::vector<std::pair<int, std::size_t>> induced_filtration_dims(const FilteredComplex<BigRational>&, int);
template std::vector<std::pair<int, std::size_t>> induced_filtration_dims(const FilteredComplex<ConjElem>&, int);

}  // namespace nchodge
