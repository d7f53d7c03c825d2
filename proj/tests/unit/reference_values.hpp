#pragma once
// Generated by tests/reference/make_reference.py (SciPy 1.15.3). Do not edit.
#include <vector>
namespace ref {
struct ShapiroCase { std::vector<double> x; double w, p; };
inline const std::vector<ShapiroCase> shapiro_cases = {
  {{0.647906, 0.469321, -0.643021}, 0.8514996166772936, 0.2444688493145698},
  {{2.391556, 0.194509, 1.454943, 1.877015}, 0.9451974097709945, 0.6862563230418263},
  {{0.081362, 0.581868, 0.4639, -0.277903, -0.70372}, 0.946393119491684, 0.7114130365931367},
  {{-1.440243, 2.927359, 3.127822, -0.226501, -0.017787, -0.314861}, 0.8378205914369227, 0.12504319682114579},
  {{0.547197, 0.655512, -1.427001, -0.645306, 0.655313, 0.493495, 0.179375}, 0.7882653569682276, 0.031295094900016564},
  {{3.519282, 2.58668, 0.117199, 0.33794, 0.455349, 1.247372, 0.802917, 0.242245}, 0.8187201120513423, 0.045239399376089395},
  {{0.580249, -0.460352, -0.411522, 0.373962, 0.323096, -0.85767, -0.484852, -0.751379, 0.191671, -0.134245}, 0.9317710587693997, 0.46553700529709646},
  {{-1.173509, -0.502628, -1.439379, 0.360357, -0.582308, 3.365856, -0.756368, -1.326283, 0.206881, -1.093377, 1.316311}, 0.8246374955194868, 0.01984798713001529},
  {{-1.717359, 0.751157, -0.088026, 0.968344, -0.686173, 0.998357, 1.439397, -0.169561, -0.304528, -0.400295, 0.13563, 2.739998}, 0.9673777224361169, 0.8814864394170048},
  {{1.038333, 0.607953, 1.101902, 0.334315, 0.004585, 3.295991, 0.823701, 1.934347, 2.962181, 0.554633, 1.209575, 0.821884, 0.146345, 0.350429, 1.015228}, 0.8442546522004963, 0.01441475534496266},
  {{-0.982239, -0.016447, -0.554483, -0.991466, 0.319571, 0.378123, 0.328083, -0.520501, 0.062668, 0.402243, -0.373971, 0.514312, 0.357021, 0.943569, 0.761422, -0.24182, 0.804188, 0.22872, -0.713988, -0.175997}, 0.9557938137022444, 0.46360039812679144},
  {{0.106158, -0.225123, 4.742938, 2.717128, 1.548731, -0.531126, 0.395054, -2.786226, -1.808925, 1.69596, -0.10442, 1.37734, 1.663072, -0.657535, -1.609062, 0.01519, 0.246407, -1.671654, 0.929626, 1.200962, 0.552718, 4.322676, 1.432208, -2.866429, -1.395909}, 0.9644493857805558, 0.5099776586778451},
  {{0.653421, -0.800757, 0.006636, -0.6193, 0.385707, 0.619941, -0.078464, -0.712965, -1.943907, 0.469378, -1.285721, 0.931187, 0.20021, -1.647566, 0.461929, -0.409346, 0.446507, 0.792565, 0.287452, 0.440731, 0.331954, -0.65742, -0.681838, -0.060006, -0.015745, 1.18579, -1.125763, -1.050372, 0.690327, -0.128177}, 0.9547454098470305, 0.2261170908249307},
  {{1.041672, 0.032349, 1.167511, 1.550309, 0.135568, 1.911763, 0.297057, 2.031241, 0.939206, 1.260976, 0.284481, 0.709422, 4.960302, 0.454809, 0.704552, 0.084918, 0.373808, 0.905688, 0.831837, 0.448716, 3.994104, 1.587371, 1.744076, 0.970238, 0.139531, 1.082276, 0.352043, 0.052393, 1.132708, 0.847675, 0.036231, 3.481675, 1.459948, 0.503835, 0.169315, 1.726674, 0.932759, 0.741887, 1.035036, 1.846111}, 0.8012709238932054, 7.200977796583051e-06},
  {{-0.179029, -0.647983, 0.695713, -0.40751, 0.233118, 0.996234, 0.404205, 0.676958, 0.091284, 0.371814, 0.124392, 0.386772, 0.703896, -0.171312, -0.313351, 0.880674, -0.94209, 0.178313, -0.894037, -0.397942, -0.720192, 0.981849, 0.188415, -0.034078, -0.111127, 0.420123, -0.797215, -0.120804, -0.916007, -0.712055, 0.27998, -0.711224, 0.818093, 0.417911, -0.600499, -0.519532, 0.197353, 0.972952, 0.353245, -0.123425, -0.355029, 0.758088, 0.828241, 0.902207, 0.017704, -0.628624, -0.697192, 0.829591, -0.680094, -0.457273}, 0.9423074642334838, 0.0166405721324212},
  {{0.972138, 0.696402, -1.190196, -0.859546, 0.487769, 0.030782, 0.338486, -0.461893, 0.880459, -3.912587, 0.66743, -0.148507, -0.723958, -0.813776, -1.460593, 0.838017, 0.696257, 0.511766, -1.152635, -1.450448, 1.445628, -0.869266, 0.620064, -0.144311, 0.5398, 1.476869, -1.509266, -0.567203, 0.122665, -0.702789, 0.991226, 1.645608, -0.362097, 1.636296, -0.304709, -0.613189, 0.291035, 0.495392, 0.246151, 0.166171, 0.565233, 0.248797, 1.307268, -2.910346, 1.001194, 0.602858, 1.038067, 1.858879, -1.395446, -0.907298, -0.312632, 1.145478, 1.124535, -2.092616, 0.235172, -0.129109, 1.074721, -0.251556, -1.975593, -1.391633}, 0.9524835680181123, 0.020411610230101754},
  {{0.233294, 0.707244, -0.100183, 1.060742, 0.20804, 0.078864, -0.67882, -0.082578, 0.498602, 1.766194, -2.211666, -0.352248, 0.35722, -0.300831, 1.454465, 1.053413, 0.322617, 0.370461, 0.071127, -1.274275, -0.567131, 0.437488, -1.309431, -0.241219, 0.401702, -0.721123, 0.044585, 0.258453, 0.84656, -0.541976, -1.150535, 0.38197, 0.353954, -0.77558, 1.666737, -0.093445, 1.241972, -0.161298, 0.049409, -0.862939, -0.703074, -0.10646, -0.774396, 1.786963, -0.750193, 0.953036, 1.01801, -0.5403, 2.003375, -1.129336, 0.39148, -1.48149, -0.044107, -0.222675, 0.348078, -0.110836, 1.361878, 0.134177, -1.597205, 2.040063, -2.414881, 0.263619, -0.069426, 1.128053, -1.980151, 0.814167, -0.262407, 1.237403, 0.238327, -1.696898, 1.67631, 0.272535, -1.057588, 1.668776, -1.117337, -0.599747, -0.62985, 1.654389, -0.718608, 0.498118}, 0.9852245447741771, 0.4876893464846061},
  {{1.780146, 0.115017, 0.90791, 1.376115, 1.470693, 0.07213, 0.51655, 0.0297, 2.463577, 0.712772, 1.416949, 0.119277, 2.387555, 0.50415, 0.647486, 2.246041, 0.228801, 1.021842, 1.189937, 0.671051, 1.347354, 0.152699, 0.019847, 1.14367, 2.886742, 0.437458, 1.911687, 0.131813, 1.082081, 2.459102, 1.348477, 0.40577, 0.665096, 1.275112, 0.141926, 0.794135, 0.040292, 1.272209, 1.053997, 0.940114, 0.899853, 1.1573, 1.313502, 0.50897, 0.305936, 4.259302, 1.1026, 1.184607, 0.983777, 0.900671, 0.571724, 0.86425, 0.285337, 0.041722, 0.281727, 1.515716, 0.450226, 0.334719, 0.217535, 2.758852, 0.227482, 0.700098, 3.764762, 0.614856, 1.337072, 1.324507, 1.287221, 3.41775, 0.157663, 0.891442, 0.940774, 2.135761, 0.147049, 0.372507, 1.437625, 1.58559, 0.117715, 0.631678, 0.484995, 0.423055, 1.475602, 0.683902, 0.236003, 0.07902, 0.122897, 1.572547, 0.609497, 1.510983, 0.067161, 0.051177, 1.891572, 0.428478, 0.402687, 0.344549, 0.887704, 0.390614, 0.958187, 0.032093, 0.488841, 0.788913}, 0.8631997902651801, 3.7639979352224445e-08},
  {{0.178344, -0.876008, -0.16067, -0.839026, 0.316918, -0.042333, -0.325338, -0.384268, 0.444504, -0.632077, -0.995815, -0.642129, 0.406996, -0.55674, 0.027773, 0.883225, -0.279265, 0.885652, 0.429699, 0.286702, 0.516058, 0.648082, 0.567159, 0.686003, -0.045146, -0.889316, -0.247292, 0.189454, -0.681083, -0.414788, -0.784184, 0.001366, -0.833391, -0.016717, 0.477337, 0.457181, -0.037149, -0.841935, -0.050327, 0.780103, 0.472661, 0.079411, -0.251686, 0.410069, -0.176787, 0.882686, -0.755872, -0.881147, -0.208859, 0.659876, -0.559448, 0.665454, -0.767011, -0.29731, 0.364178, -0.828374, -0.062447, -0.257727, 0.296575, 0.191423, 0.642346, -0.722863, -0.42116, 0.007545, 0.233482, 0.504698, -0.452783, 0.544461, 0.054502, -0.301564, -0.850348, 0.218477, -0.282267, 0.682154, -0.674022, 0.657181, 0.042488, 0.904458, 0.697522, 0.875047, -0.459052, 0.168883, 0.683341, 0.826677, -0.003187, 0.362024, 0.757689, -0.412987, -0.177872, -0.880058, 0.389254, 0.315993, -0.748315, 0.489912, -0.240484, 0.942069, -0.556453, 0.883476, 0.372685, -0.81324, 0.607795, -0.799251, 0.857449, 0.592568, 0.461675, -0.747004, -0.876075, 0.673305, 0.887172, -0.701218, -0.334202, -0.533359, -0.91961, 0.755243, -0.028011, 0.518518, 0.380422, 0.317962, -0.578077, 0.066837, -0.293646, -0.927208, 0.841096, -0.525026, -0.163466, -0.479835, -0.093974, 0.184812, -0.533531, -0.943222, -0.03775, 0.557554, 0.384084, 0.192841, 0.100984, 0.32414, -0.683259, -0.974157, 0.861862, -0.613759, -0.510434, -0.992965, 0.061406, 0.094792, -0.737982, -0.412488, 0.899709, 0.294083, -0.527017, 0.886928}, 0.9469696697894181, 1.84972022812519e-05},
  {{0.144329, -1.949008, -0.518499, 1.587395, 0.230527, 0.671475, 0.316274, 0.612244, 0.259589, 2.277373, -3.280417, 0.762999, -0.068827, 0.892412, 0.927314, 0.061885, -1.28495, -1.138684, -0.255809, 0.772053, 2.55079, -0.570004, 0.040794, 1.135317, 2.139492, -0.80298, -0.208284, -2.038551, 0.798528, -0.63647, 1.004843, 0.199102, -2.200446, 1.091433, 3.676729, -0.167264, 0.740567, 0.286418, 1.298324, 1.764594, -1.867989, 1.216605, -1.349479, -2.368893, -0.200213, -0.143658, -0.739529, -0.456883, 1.380881, 0.370886, 0.569323, 0.265311, 0.215597, -0.889587, 0.602067, 0.830254, -5.849219, 1.663205, 6.950534, 1.346708, 0.459364, -3.436167, -0.569911, 0.509361, -1.335792, -1.022502, 0.393587, 2.367764, -0.372331, 0.070774, 0.192959, -0.846315, -0.010763, -2.644189, -0.517196, -0.731177, 0.634698, 1.991865, -0.6788, -1.19785, -2.082814, 2.75466, 0.120612, 1.210754, 1.305041, -2.929853, 0.717936, -1.207299, 0.924692, -0.308961, -3.775734, -2.808716, -0.291243, -0.490263, 1.060302, 0.153395, -0.39211, 0.229451, 0.132942, 0.824172, -0.346187, -0.215797, -0.126348, -0.677427, 1.059354, -0.485491, 0.481758, -1.309646, -0.743772, -0.981861, 1.578834, -0.751979, 0.674729, 0.278113, -1.184459, 0.607664, 3.632371, 1.60016, -0.008106, -0.483313, 1.13721, -0.527925, -0.12925, -0.510619, -0.751767, 0.686885, 1.082309, -1.735926, -1.362613, -0.857702, 2.650192, 0.763843, -0.118664, -0.004117, 1.930252, 0.032428, 2.416259, -0.277655, 1.91904, 0.455072, 0.356632, -1.394777, 0.497377, 1.206594, 0.748022, 3.380795, -0.006581, -0.687999, 0.591686, -0.393707, 0.70784, -0.597438, 0.37745, -0.46491, -0.582222, -1.273792, -1.298808, 1.802126, 0.201531, -1.947202, 0.884711, 2.399388, 1.109503, -0.476961, -1.432789, 0.457922, -0.393986, 0.504577, 0.005508, 2.523412, 1.040607, 1.265872, 0.763322, -0.248848, 0.210839, 0.947114, -1.264221, 4.810199, -0.304426, 0.989806, 1.48082, 5.027665, 0.803154, 0.885509, 0.621748, -0.773102, 0.520065, -1.253106, 0.904226, 0.646942, -0.972912, -1.487775, 1.829882, 0.622524, -0.166973, -1.49505, -0.917744, 2.352215, 0.851138, 0.263794}, 0.9529269222335386, 3.6512196292341176e-06},
};
struct Pair { double x, y; };
inline const std::vector<Pair> normal_cdf = {{-8, 6.22096057427174e-16}, {-5, 2.866515718791933e-07}, {-3.5, 0.00023262907903552502}, {-2, 0.022750131948179195}, {-1, 0.15865525393145707}, {-0.5, 0.3085375387259869}, {0, 0.5}, {0.3, 0.6179114221889526}, {1, 0.8413447460685429}, {1.96, 0.9750021048517795}, {3, 0.9986501019683699}, {6, 0.9999999990134123}};
inline const std::vector<Pair> normal_quantile = {{1e-12, -7.034483825301131}, {1e-06, -4.753424308822899}, {0.001, -3.090232306167813}, {0.025, -1.9599639845400545}, {0.2, -0.8416212335729142}, {0.5, 0.0}, {0.7, 0.5244005127080407}, {0.975, 1.959963984540054}, {0.999999, 4.753424308817087}};
struct Beta { double a, b, x, v; };
inline const std::vector<Beta> incomplete_beta = {{0.5, 0.5, 0.3, 0.36901011956554536}, {2, 3, 0.4, 0.5247999999999999}, {10, 2, 0.9, 0.6973568802000002}, {1, 1, 0.25, 0.25}, {50, 60, 0.45, 0.46423529143060444}, {0.1, 5, 0.01, 0.7690889207843462}, {200, 300, 0.41, 0.6776281647721836}};
struct TCase { double t, df, cdf; };
inline const std::vector<TCase> student_t = {{-3.0, 2, 0.04773298313335456}, {-1.0, 5, 0.18160873382456127}, {0.0, 7, 0.5}, {0.5, 1, 0.6475836176504333}, {1.7, 12.5, 0.943070508163106}, {2.5, 30, 0.9909421754659666}, {4.0, 3, 0.9859957719949269}, {40.3, 100000, 1.0}};
inline const std::vector<TCase> student_t_quantile = {{12.706204736432095, 1, 0.975}, {2.2281388519649385, 10, 0.975}, {3.849911466001553, 5.5, 0.995}, {-1.7247182429207863, 20, 0.05}, {3.1314798142297806, 200, 0.999}};
struct TwoSample { std::vector<double> a, b; double t, df, t_p_greater, t_p_two, u, u_p_greater, u_p_two; };
inline const std::vector<TwoSample> two_sample = {
  {{1.946, 1.005, 0.321, -0.443, 2.447, 1.163, 1.66, 1.739}, {0.163, 4.331, 1.443, 0.894, -0.408, 0.192, 0.777, 0.076, -1.751, -1.165, 1.696, 1.592}, 1.0266362966563496, 17.86534274829571, 0.15914613847855577, 0.31829227695711154, 67.0, 0.07674585781054448, 0.15349171562108896},
  {{2.3, -0.3, 2.1, 2.6, 0.8, 1.1, 3.2, 0.5, 2.2, -0.1, 2.5, 1.0, 3.4, 4.6, 2.9, 2.7, 1.5, 1.0, 2.2, 2.8, 1.2, 2.5, 0.3, 1.2, -1.0, 0.9, 2.3, 3.2, 2.6, 3.8}, {3.1, 2.4, -1.0, 2.0, -0.7, 1.1, 0.8, 0.9, 1.4, 1.9, 2.2, 1.5, 1.8, 2.6, 0.9, -1.3, 1.4, 3.2, 2.6, 0.5, 1.7, 1.0, 2.7, 1.0, 0.3, 0.8, -1.3, 2.8, 0.7, -3.3, 1.6, 0.1, 0.4, 5.4, 0.8, 2.8, 0.9, 2.1, 1.9, -0.0}, 1.8569797576949154, 66.75106832097329, 0.033863421968096656, 0.06772684393619331, 760.5, 0.028721066813757107, 0.057442133627514214},
  {{4.853, 0.491, 0.853, 1.193, 0.834, 2.363, 0.765, -1.854, 1.842, 1.898, 1.282, 3.323, 0.395, -0.158, 1.414, 0.062, 2.166, 1.793, 0.65, -0.595, 1.785, 1.249, 3.832, 0.892, 0.824}, {-0.801, 3.874, 0.082, 1.499, 0.826, 1.256, -0.582, 0.473, -1.284, 1.222, 0.635, -0.221, 1.486, 1.303, 1.034, -1.206, 2.604, -0.414, 0.482, 3.288, 1.998, -0.681, 0.603, 1.45, -0.517, -0.373, 5.125, 2.337, -0.434, 3.961, -0.694, 0.013, 0.394, 1.978, 2.954, 1.318, 1.189, 1.205, 3.556, 1.745, -2.517, -0.121, 2.452, -0.078, 1.863, 1.448, 2.645, 1.614, 0.336, 1.597, 1.017, -0.431, -0.177, 1.947, -2.29, 0.168, -0.045, 1.359, 1.727, -0.045}, 1.0841934283579864, 48.176474758849665, 0.14183758046041012, 0.28367516092082024, 862.0, 0.14109633107931457, 0.28219266215862915},
  {{3.8, 1.0, 0.8, 0.1, 6.2, -0.7, 4.1, 3.4, 0.8, 0.2, 0.1, -0.4, -0.6, 3.0, -0.2, 0.5, 3.3, -1.7, 2.7, 0.4, -0.6, 1.3, -0.5, 4.0, 3.4, 0.6, -1.0, 0.2, 3.6, 0.5, 1.0, 3.0, 1.9, 0.5, -0.1, 1.4, 2.1, 4.4, 4.9, 3.1, -0.5, 1.5, 1.3, 4.5, 2.1, 5.3, -0.7, 1.9, 2.4, 5.0}, {2.0, -0.5, 0.7, 2.1, 3.2, -0.5, 0.3, -2.4, 2.7, 1.3, 2.2, 0.8, 2.3, 0.2, 2.4, 2.6, 1.7, 0.3, 2.3, 3.9, 2.2, 1.5, 2.7, 0.4, 1.6, 0.3, 1.4, 0.8, 3.1, -0.1, 1.2, 1.7, 1.3, 1.0, -1.1, 0.3, -0.3, -0.2, 1.4, 1.5, 4.7, 0.7, 1.9, -0.4, -0.0, 1.9, 1.0, 1.6, -0.9, 0.6}, 1.4311565755118278, 86.76252427449187, 0.07798875978915105, 0.1559775195783021, 1362.5, 0.21995597627319313, 0.43991195254638626},
  {{5.273, 1.77, 1.694}, {-0.053, 1.107, -2.25, 2.0, 1.265, 5.583, 1.542, 0.504, -0.076, 2.52, 1.141, 0.556, 1.785, 1.178, 0.759, 1.223, 1.733, 0.93, -0.009, 2.158, 0.982, 2.309, 2.336, 4.014, -0.269, 1.762, -0.183, 2.714, 1.625, -0.572, -0.057, 0.49, 1.693, -0.105, 0.158, 0.794, -2.241, 2.667, -2.72, -1.264, 0.366, 1.993, 1.387, 2.074, 2.665, 1.234, 1.169, -3.026, 0.886, 1.369, 1.174, -0.756, 1.248, 0.985, 2.577, -2.542, 2.356, 1.408, 1.6, 0.296, -1.032, 2.017, 0.442, 0.424, 2.37, 0.459, 0.048, -0.477, 2.711, -0.056}, 1.6838706724611257, 2.0944026296320857, 0.11430679896005091, 0.22861359792010183, 171.0, 0.03436832632843363, 0.06873665265686726},
  {{0.6, 5.5, -1.4, -3.4, 6.3, -1.2, 0.5, 2.1, -1.3, 2.0, 1.2, 0.5, -4.0, -0.3, 0.3, 1.9, 4.7, 10.0, 4.6, 4.7, 1.3, -2.2, 0.3, 4.5, -0.4, 2.2, 4.1, 5.0, 2.5, 6.8, 2.8, -1.0, 2.7, 1.8, -0.3, 6.5, 2.2, -1.5, 5.3, 2.7, 4.4, 1.0, 6.2, 3.1, 3.1, 4.0, 2.9, 6.4, 7.5, -2.2, 4.1, -2.9, -1.1, 2.4, 1.9, 2.9, 4.3, -0.3, 3.8, -1.8, 2.8, -1.7, -0.8, 0.0, -2.7, 3.9, 6.5, 4.6, 4.9, 3.9, 1.9, 3.6, 0.5, 3.9, -1.0, 2.5, 2.9, 4.9, 0.8, -1.1, -2.7, 2.3, -3.3, 1.9, 4.4, 1.0, 2.7, -3.5, 0.4, -0.3, 2.7, 1.3, 5.9, 1.9, 1.5, -4.2, 0.8, 2.2, -2.5, 2.2}, {0.2, 0.1, 1.2, 0.9, 1.9, 0.1, 1.4, -1.0, 4.0, 2.0, 2.3, 0.8, 0.7, 3.0, -1.9, -0.6, 0.5, 0.9, -0.9, -2.6, 2.9, 1.2, 1.0, 1.6, -0.1, 1.8, 2.3, 2.8, -2.0, 2.8, -1.2, 5.8, 3.0, -1.2, 0.5}, 2.038349047270927, 95.591001998162, 0.022138554619637187, 0.04427710923927437, 2103.5, 0.038136807199321957, 0.07627361439864391},
};
}  // namespace ref
