#include "gsdeform/embedded.hpp"

namespace gsdeform::embedded {

const char* const kExample4Dga = R"(# Commutative DGA with zero differential
field 2
cap 16
basis 1 0
basis a2 2
basis a3 3
basis b3 3
basis a2a3 5
unit 1
mu a2 a3 = a2a3
mu a3 a2 = a2a3
)";

const char* const kLoopSpaceDga = R"(# Cochain model with a single cup-one product
field 2
cap 16
basis 1 0
basis a2 2
basis a3 3
basis b 3
basis a2a3 5
unit 1
mu a2 a3 = a2a3
mu a3 a2 = a2a3
E 1 1 b ; b = a2a3
)";

const char* const kExample4Psi = R"(psi 1 2 : beta2 beta2 -> gamma
)";

const char* const kExample4Omega = R"(# The beta2 beta2 values together with the entries forced by dpsi = omega22 and
# del psi = omega13 on classes of degree <= 7; every other value is zero.
omega 2 2 : beta2 beta2 -> alpha1*alpha2 + alpha2*alpha1
omega 2 2 : beta2 h3_1 -> alpha1*gamma
omega 2 2 : beta2 h3_2 -> gamma*alpha1
omega 2 2 : beta2 h4_1 -> alpha2*gamma
omega 2 2 : beta2 h4_2 -> gamma*alpha2
omega 2 2 : beta2 h4_3 -> beta2*gamma + gamma*beta2
omega 2 2 : beta2 h4_4 -> h2_2*gamma
omega 2 2 : beta2 h4_7 -> gamma*h2_2
omega 2 2 : beta2 h5_1 -> h3_1*gamma
omega 2 2 : beta2 h5_2 -> gamma*gamma
omega 2 2 : beta2 h5_5 -> gamma*h3_1 + h3_2*gamma
omega 2 2 : beta2 h5_6 -> gamma*gamma
omega 2 2 : beta2 h5_7 -> gamma*h3_2
omega 2 2 : beta2 h5_8 -> h3_3*gamma
omega 2 2 : beta2 h5_12 -> gamma*h3_3
omega 2 2 : h3_1 beta2 -> alpha1*gamma
omega 2 2 : h3_1 h4_1 -> gamma*gamma
omega 2 2 : h3_1 h4_3 -> h3_1*gamma + h3_2*gamma
omega 2 2 : h3_1 h4_4 -> h3_3*gamma
omega 2 2 : h3_2 beta2 -> gamma*alpha1
omega 2 2 : h3_2 h4_2 -> gamma*gamma
omega 2 2 : h3_2 h4_3 -> gamma*h3_1 + gamma*h3_2
omega 2 2 : h3_2 h4_7 -> gamma*h3_3
omega 2 2 : h4_1 beta2 -> alpha2*gamma
omega 2 2 : h4_1 h3_1 -> gamma*gamma
omega 2 2 : h4_2 beta2 -> gamma*alpha2
omega 2 2 : h4_2 h3_2 -> gamma*gamma
omega 2 2 : h4_3 beta2 -> beta2*gamma + gamma*beta2
omega 2 2 : h4_3 h3_1 -> h3_1*gamma + h3_2*gamma
omega 2 2 : h4_3 h3_2 -> gamma*h3_1 + gamma*h3_2
omega 2 2 : h4_4 beta2 -> h2_2*gamma
omega 2 2 : h4_4 h3_1 -> h3_3*gamma
omega 2 2 : h4_7 beta2 -> gamma*h2_2
omega 2 2 : h4_7 h3_2 -> gamma*h3_3
omega 2 2 : h5_1 beta2 -> h3_1*gamma
omega 2 2 : h5_2 beta2 -> gamma*gamma
omega 2 2 : h5_5 beta2 -> gamma*h3_1 + h3_2*gamma
omega 2 2 : h5_6 beta2 -> gamma*gamma
omega 2 2 : h5_7 beta2 -> gamma*h3_2
omega 2 2 : h5_8 beta2 -> h3_3*gamma
omega 2 2 : h5_12 beta2 -> gamma*h3_3
omega 1 3 : beta2 beta2 h2_2 -> h5_11
omega 1 3 : beta2 beta2 h3_1 -> h6_11 + h6_14
omega 1 3 : beta2 beta2 h3_2 -> h6_11 + h6_14
omega 1 3 : h2_2 beta2 beta2 -> h5_11
omega 1 3 : h3_1 beta2 beta2 -> h6_11 + h6_14
omega 1 3 : h3_2 beta2 beta2 -> h6_11 + h6_14
)";

const char* const kLoopSpaceOmega = R"(# Transferred with pin g 2 1 : beta beta -> [a2|a3], classes of degree <= 7.
omega 2 2 : beta beta -> alpha1*alpha2
omega 2 2 : beta h3_1 -> h2_2*alpha2
omega 2 2 : beta h3_2 -> alpha1*gamma + h2_2*alpha2
omega 2 2 : beta h4_1 -> alpha1*h4_0 + gamma*alpha2
omega 2 2 : beta h4_2 -> alpha1*h4_0
omega 2 2 : beta h4_3 -> alpha1*h4_1 + h3_2*alpha2
omega 2 2 : beta h4_4 -> h3_3*alpha2
omega 2 2 : beta h4_5 -> h2_2*gamma + h3_3*alpha2
omega 2 2 : beta h4_7 -> alpha1*h4_6 + h2_2*gamma + h3_3*alpha2
omega 2 2 : beta h5_0 -> h2_2*h4_0
omega 2 2 : beta h5_1 -> h2_2*h4_1 + h4_5*alpha2
omega 2 2 : beta h5_2 -> h2_2*h4_0 + h4_6*alpha2
omega 2 2 : beta h5_4 -> alpha1*h5_3 + h2_2*h4_0 + gamma*gamma + h4_6*alpha2
omega 2 2 : beta h5_5 -> alpha1*h5_2 + h2_2*h4_1 + h4_7*alpha2
omega 2 2 : beta h5_6 -> alpha1*h5_3 + h2_2*h4_0
omega 2 2 : beta h5_7 -> alpha1*h5_4 + h3_2*gamma + h4_7*alpha2
omega 2 2 : beta h5_8 -> h4_8*alpha2
omega 2 2 : beta h5_9 -> h3_3*gamma + h4_8*alpha2
omega 2 2 : beta h5_10 -> h2_2*h4_6 + h3_3*gamma + h4_8*alpha2
omega 2 2 : beta h5_12 -> alpha1*h5_11 + h2_2*h4_6 + h3_3*gamma + h4_8*alpha2
omega 2 2 : h3_1 beta -> h2_2*alpha2
omega 2 2 : h3_1 h3_2 -> h2_2*gamma + h3_3*alpha2
omega 2 2 : h3_1 h4_1 -> h2_2*h4_0 + h4_6*alpha2
omega 2 2 : h3_1 h4_2 -> h2_2*h4_0
omega 2 2 : h3_1 h4_3 -> h2_2*h4_1 + h4_5*alpha2 + h4_7*alpha2
omega 2 2 : h3_1 h4_4 -> h4_8*alpha2
omega 2 2 : h3_1 h4_7 -> h2_2*h4_6 + h3_3*gamma + h4_8*alpha2
omega 2 2 : h3_2 beta -> alpha1*gamma + h2_2*alpha2
omega 2 2 : h3_2 h3_1 -> h2_2*gamma + h3_3*alpha2
omega 2 2 : h3_2 h4_1 -> alpha1*h5_3 + h2_2*h4_0 + gamma*gamma + h4_6*alpha2
omega 2 2 : h3_2 h4_2 -> alpha1*h5_3 + h2_2*h4_0
omega 2 2 : h3_2 h4_3 -> alpha1*h5_2 + alpha1*h5_4 + h2_2*h4_1 + h3_2*gamma + h4_7*alpha2
omega 2 2 : h3_2 h4_4 -> h3_3*gamma + h4_8*alpha2
omega 2 2 : h3_2 h4_7 -> alpha1*h5_11 + h2_2*h4_6 + h3_3*gamma + h4_8*alpha2
omega 2 2 : h4_1 beta -> alpha1*h4_0 + gamma*alpha2
omega 2 2 : h4_1 h3_1 -> h2_2*h4_0 + h4_6*alpha2
omega 2 2 : h4_1 h3_2 -> alpha1*h5_3 + h2_2*h4_0 + gamma*gamma + h4_6*alpha2
omega 2 2 : h4_2 beta -> alpha1*h4_0
omega 2 2 : h4_2 h3_1 -> h2_2*h4_0
omega 2 2 : h4_2 h3_2 -> alpha1*h5_3 + h2_2*h4_0
omega 2 2 : h4_3 beta -> alpha1*h4_1 + h3_2*alpha2
omega 2 2 : h4_3 h3_1 -> h2_2*h4_1 + h4_5*alpha2 + h4_7*alpha2
omega 2 2 : h4_3 h3_2 -> alpha1*h5_2 + alpha1*h5_4 + h2_2*h4_1 + h3_2*gamma + h4_7*alpha2
omega 2 2 : h4_4 beta -> h3_3*alpha2
omega 2 2 : h4_4 h3_1 -> h4_8*alpha2
omega 2 2 : h4_4 h3_2 -> h3_3*gamma + h4_8*alpha2
omega 2 2 : h4_5 beta -> h2_2*gamma + h3_3*alpha2
omega 2 2 : h4_7 beta -> alpha1*h4_6 + h2_2*gamma + h3_3*alpha2
omega 2 2 : h4_7 h3_1 -> h2_2*h4_6 + h3_3*gamma + h4_8*alpha2
omega 2 2 : h4_7 h3_2 -> alpha1*h5_11 + h2_2*h4_6 + h3_3*gamma + h4_8*alpha2
omega 2 2 : h5_0 beta -> h2_2*h4_0
omega 2 2 : h5_1 beta -> h2_2*h4_1 + h4_5*alpha2
omega 2 2 : h5_2 beta -> h2_2*h4_0 + h4_6*alpha2
omega 2 2 : h5_4 beta -> alpha1*h5_3 + h2_2*h4_0 + gamma*gamma + h4_6*alpha2
omega 2 2 : h5_5 beta -> alpha1*h5_2 + h2_2*h4_1 + h4_7*alpha2
omega 2 2 : h5_6 beta -> alpha1*h5_3 + h2_2*h4_0
omega 2 2 : h5_7 beta -> alpha1*h5_4 + h3_2*gamma + h4_7*alpha2
omega 2 2 : h5_8 beta -> h4_8*alpha2
omega 2 2 : h5_9 beta -> h3_3*gamma + h4_8*alpha2
omega 2 2 : h5_10 beta -> h2_2*h4_6 + h3_3*gamma + h4_8*alpha2
omega 2 2 : h5_12 beta -> alpha1*h5_11 + h2_2*h4_6 + h3_3*gamma + h4_8*alpha2
omega 1 3 : beta beta h3_1 -> h6_8
omega 1 3 : beta beta h3_2 -> h6_8
omega 1 3 : h3_1 beta beta -> h6_8
omega 1 3 : h3_2 beta beta -> h6_8
)";

const char* const kLoopSpacePins = R"(pin g 2 1 : beta beta -> [a2|a3]
)";

const char* const kLoopSpacePinsAlt = R"(pin g 2 1 : beta beta -> [a3|a2]
)";

}  // namespace gsdeform::embedded
