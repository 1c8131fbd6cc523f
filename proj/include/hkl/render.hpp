#pragma once

#include <string>

#include "hkl/ballot.hpp"
#include "hkl/binary_tree.hpp"
#include "hkl/linkpattern.hpp"

namespace hkl {

enum class Figure { Tikz, Svg };
Figure parseFigure(const std::string& s);

// Output depends only on the arguments, so equal inputs give equal bytes.
std::string renderDiagram(const BinaryString& a, Sign eps, Figure f);
// Strips over the skew shape of (alpha, beta) with the + convention.
std::string renderConfiguration(const BinaryString& alpha, const BinaryString& beta,
                                const StripConfiguration& c, Figure f);
std::string renderLinkPattern(const BinaryString& a, const CaseTag& kase, Figure f);
std::string renderTree(const BinaryTree& tree, const Labelling* lab, Figure f);

}  // namespace hkl
