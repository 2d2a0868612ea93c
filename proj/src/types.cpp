#include "cattaneo/types.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace cattaneo {

void ParameterPoint::validate() const {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::domain_error("alpha must lie in [0,1]");
  if (!(beta >= 0.0 && beta <= 1.0))
    throw std::domain_error("beta must lie in [0,1]");
  if (!(m >= 0.0)) throw std::domain_error("m must be >= 0");
  if (m > 0.0 && !(gamma > 0.0 && gamma <= 1.0))
    throw std::domain_error("gamma must lie in (0,1] when m > 0");
  if (!(sigma > 0.0)) throw std::domain_error("sigma must be > 0");
  if (!(tau > 0.0)) throw std::domain_error("tau must be > 0");
}

namespace {

struct LabelName {
  RegionLabel label;
  std::string_view name;
};

constexpr std::array<LabelName, 24> kNames = {{
    {RegionLabel::T1, "T1"},       {RegionLabel::T2, "T2"},
    {RegionLabel::T3, "T3"},       {RegionLabel::T4, "T4"},
    {RegionLabel::F12, "F12"},     {RegionLabel::F13, "F13"},
    {RegionLabel::F14, "F14"},     {RegionLabel::F2, "F2"},
    {RegionLabel::F23, "F23"},     {RegionLabel::L123, "L123"},
    {RegionLabel::L124, "L124"},   {RegionLabel::L2, "L2"},
    {RegionLabel::L34, "L34"},     {RegionLabel::P234, "P234"},
    {RegionLabel::T1s, "T1*"},     {RegionLabel::T2s, "T2*"},
    {RegionLabel::T4s, "T4*"},     {RegionLabel::F12s, "F12*"},
    {RegionLabel::F14s, "F14*"},   {RegionLabel::F2s, "F2*"},
    {RegionLabel::L124s, "L124*"}, {RegionLabel::L23s, "L23*"},
    {RegionLabel::P123s, "P123*"}, {RegionLabel::Unclassified, "Unclassified"},
}};

}  // namespace

bool starred(RegionLabel label) {
  return label >= RegionLabel::T1s && label <= RegionLabel::P123s;
}

std::string_view label_name(RegionLabel label) {
  for (const auto& e : kNames)
    if (e.label == label) return e.name;
  return "Unclassified";
}

RegionLabel label_from_name(std::string_view name) {
  for (const auto& e : kNames)
    if (e.name == name) return e.label;
  throw std::domain_error("unknown region label: " + std::string(name));
}

std::string_view kind_name(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Exponential: return "Exponential";
    case VerdictKind::Polynomial: return "Polynomial";
    case VerdictKind::Unknown: return "Unknown";
    case VerdictKind::OutOfTheory: return "OutOfTheory";
    case VerdictKind::IllPosedFramework: return "IllPosedFramework";
  }
  return "Unknown";
}

}  // namespace cattaneo
