#ifndef URS_FAMILIES_HPP
#define URS_FAMILIES_HPP

#include <string>
#include <vector>

#include "urs/poly.hpp"

namespace urs {

enum class FamilyId { LiYang, An, FrankReinders, Alzahary, BCJ, BC, AnHoa };
enum class Mode { Meromorphic, Entire };
enum class LiYangThreshold { LiYang15, Yi13 };

std::string family_id_str(FamilyId id);
FamilyId family_id_from_str(const std::string& s);
std::string mode_str(Mode m);

enum class CheckStatus { Pass, Fail, Unevaluated };

struct CheckedCondition {
  std::string name;
  CheckStatus status;
  std::string evidence;
};

struct FamilyInstance {
  FamilyId family_id;
  std::vector<std::pair<std::string, std::string>> params;
  Poly poly;
  Mode mode = Mode::Meromorphic;
  std::vector<CheckedCondition> checked_conditions;
  /// Number of distinct critical points published for the family, when the
  /// family fixes it (k = m+1 or k = 2); -1 when not published.
  int published_k = -1;
  /// Published URS cardinality claim (the zero-set size), -1 if none.
  int cardinality_claim = -1;

  bool ok() const;
  std::vector<std::string> failed_conditions() const;
};

/// Thrown when a family's published side conditions are violated; carries one
/// name per violated condition.
class FamilyValidationError : public std::runtime_error {
 public:
  FamilyValidationError(FamilyId id, std::vector<std::string> conditions);
  const std::vector<std::string>& conditions() const { return conditions_; }

 private:
  std::vector<std::string> conditions_;
};

FamilyInstance construct_li_yang(int n, int m, const GaussRat& a, const GaussRat& b,
                                 Mode mode, LiYangThreshold threshold_rule);
FamilyInstance construct_an(int n, int m, const GaussRat& a, const GaussRat& b,
                            const GaussRat& c);
FamilyInstance construct_frank_reinders(int n, const GaussRat& c);
FamilyInstance construct_alzahary(int n, const GaussRat& a, const GaussRat& b);
FamilyInstance construct_bcj(int n, int m, const GaussRat& c);
FamilyInstance construct_bc(int m, int n, const GaussRat& a, const GaussRat& b,
                            const GaussRat& c);
FamilyInstance construct_an_hoa(int n, const GaussRat& a, const GaussRat& b,
                                const GaussRat& c);

/// Zero set moved to alpha*S + beta; geometric checks re-run, cardinality
/// claim inherited.
FamilyInstance shift_family(const FamilyInstance& inst, const GaussRat& alpha,
                            const GaussRat& beta);

/// The double binomial sum whose derivative is (z-a)^n (z-b)^m.
Poly bc_base_polynomial(int m, int n, const GaussRat& a, const GaussRat& b);

}  // namespace urs

#endif
