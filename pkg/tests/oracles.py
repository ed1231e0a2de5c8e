"""Frozen extended-precision reference values (generated by make_oracles.py)."""
SI_1_SERIES = 0.94608307036718301
CI_1_SERIES = 0.33740392290096813

# (z, Si, Ci, f, g)
SPECIAL_TABLE = [
    (1e-8, 9.9999999999999999e-9, -17.843465079050833, 1.5707961383602458, 17.843465094758795),
    (1e-3, 0.00099999994444444611, -6.3305398640805938, 1.5634650031433635, 6.3321064948761433),
    (0.1, 0.09994446110827695, -1.7278683866572966, 1.2910047283091012, 1.8660764089090893),
    (0.5, 0.49310741804306669, -0.1777840788066129, 0.86052676572615856, 0.67269179286854911),
    (1, 0.94608307036718301, 0.33740392290096813, 0.62144962423581336, 0.34337796155642703),
    (2, 1.6054129768026948, 0.422980828774865, 0.39902098859418385, 0.14454530303733242),
    (3.9, 1.7765013604478054, -0.12349934920781514, 0.23426660213160283, 0.051824793782624181),
    (4, 1.7582031389490531, -0.14098169788693041, 0.22919256802452698, 0.049678155593656751),
    (4.1, 1.7387436264917689, -0.15616539182812111, 0.22432669529471846, 0.047659824364470539),
    (7.5, 1.5106815309433859, 0.11563320323793427, 0.12930185331814712, 0.016305124955871761),
    (10, 1.658347594218874, -0.045456433004455373, 0.098191035010170169, 0.0094885390163548074),
    (20, 1.5482417010434398, 0.044419820845353317, 0.049757002659021293, 0.0024642063857782465),
    (39.5, 1.5759411659934982, 0.024763512231371313, 0.025284248855555244, 0.00063848901564373525),
    (40, 1.5869851193547845, 0.019020007896208767, 0.02496898012626847, 0.00062268481026555851),
    (40.5, 1.5938372573281598, 0.0088132008763185409, 0.024661467564173328, 0.00060745955110435244),
    (100, 1.5622254668890563, -0.0051488251426104921, 0.0099980023928399618, 9.9940119499589493e-5),
    (1000, 1.5702331219687712, 0.00082631551109068228, 0.00099999800002399928, 9.9999400011999496e-7),
    (1e4, 1.5708915453859619, -3.0551916724485213e-5, 9.999999800000024e-5, 9.99999940000012e-9),
    (1e6, 1.5707953900431191, -3.4999443892272049e-7, 9.99999999998e-7, 9.99999999994e-13),
]

# (x = k0 d, ground bracket, excited bracket)
BRACKET_TABLE = [
    (1e-3, 9.420777963429807, -9.4287779580963861),
    (0.3, 8.2682338606141089, -10.491476768909214),
    (1, 6.1840552805842266, -13.08669625065724),
    (5, 2.2126090316364514, -2379.3247125794815),
    (19.9, 0.59928592436352265, 1.6269375585667822e+5),
    (20.1, 0.59339455063252043, 1.0935127151095525e+5),
    (39.9, 0.30028206359408514, -1.5369711109956659e+6),
    (40.1, 0.29878902493726497, -1.6072035057126742e+6),
    (50, 0.23976080126844555, -1.508584476933899e+6),
    (100, 0.11997002515960356, -2.1761406370185187e+7),
    (1000, 0.011999970000251996, 2.3360554243612019e+10),
    (1e4, 0.0011999999700000025, 1.462993789345014e+13),
]
