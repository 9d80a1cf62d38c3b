class Big {
  int total = 0;
  int m0(int a, int b) {
    int s = a * 0 + b;
    if (s > 0) {
      s = s - f(a, b);
    }
    while (s < 0) {
      s = s + 1;
    }
    return s;
  }
  int m1(int a, int b) {
    int s = a * 1 + b;
    if (s > 1) {
      s = s - f(a, b);
    }
    while (s < 1) {
      s = s + 1;
    }
    return s;
  }
  int m2(int a, int b) {
    int s = a * 2 + b;
    if (s > 2) {
      s = s - f(a, b);
    }
    while (s < 2) {
      s = s + 1;
    }
    return s;
  }
  int m3(int a, int b) {
    int s = a * 3 + b;
    if (s > 3) {
      s = s - f(a, b);
    }
    while (s < 3) {
      s = s + 1;
    }
    return s;
  }
  int m4(int a, int b) {
    int s = a * 4 + b;
    if (s > 4) {
      s = s - f(a, b);
    }
    while (s < 4) {
      s = s + 1;
    }
    return s;
  }
  int m5(int a, int b) {
    int s = a * 5 + b;
    if (s > 5) {
      s = s - f(a, b);
    }
    while (s < 5) {
      s = s + 1;
    }
    return s;
  }
  int m6(int a, int b) {
    int s = a * 6 + b;
    if (s > 6) {
      s = s - f(a, b);
    }
    while (s < 6) {
      s = s + 1;
    }
    return s;
  }
  int m7(int a, int b) {
    int s = a * 7 + b;
    if (s > 0) {
      s = s - f(a, b);
    }
    while (s < 7) {
      s = s + 1;
    }
    return s;
  }
  int m8(int a, int b) {
    int s = a * 8 + b;
    if (s > 1) {
      s = s - f(a, b);
    }
    while (s < 8) {
      s = s + 1;
    }
    return s;
  }
  int m9(int a, int b) {
    int s = a * 9 + b;
    if (s > 2) {
      s = s - f(a, b);
    }
    while (s < 9) {
      s = s + 1;
    }
    return s;
  }
  int m10(int a, int b) {
    int s = a * 10 + b;
    if (s > 3) {
      s = s - f(a, b);
    }
    while (s < 10) {
      s = s + 1;
    }
    return s;
  }
  int m11(int a, int b) {
    int s = a * 11 + b;
    if (s > 4) {
      s = s - f(a, b);
    }
    while (s < 11) {
      s = s + 1;
    }
    return s;
  }
  int m12(int a, int b) {
    int s = a * 12 + b;
    if (s > 5) {
      s = s - f(a, b);
    }
    while (s < 12) {
      s = s + 1;
    }
    return s;
  }
  int m13(int a, int b) {
    int s = a * 13 + b;
    if (s > 6) {
      s = s - f(a, b);
    }
    while (s < 13) {
      s = s + 1;
    }
    return s;
  }
  int m14(int a, int b) {
    int s = a * 14 + b;
    if (s > 0) {
      s = s - f(a, b);
    }
    while (s < 14) {
      s = s + 1;
    }
    return s;
  }
  int m15(int a, int b) {
    int s = a * 15 + b;
    if (s > 1) {
      s = s - f(a, b);
    }
    while (s < 15) {
      s = s + 1;
    }
    return s;
  }
  int m16(int a, int b) {
    int s = a * 16 + b;
    if (s > 2) {
      s = s - f(a, b);
    }
    while (s < 16) {
      s = s + 1;
    }
    return s;
  }
  int m17(int a, int b) {
    int s = a * 17 + b;
    if (s > 3) {
      s = s - f(a, b);
    }
    while (s < 17) {
      s = s + 1;
    }
    return s;
  }
  int m18(int a, int b) {
    int s = a * 18 + b;
    if (s > 4) {
      s = s - f(a, b);
    }
    while (s < 18) {
      s = s + 1;
    }
    return s;
  }
  int m19(int a, int b) {
    int s = a * 19 + b;
    if (s > 5) {
      s = s - f(a, b);
    }
    while (s < 19) {
      s = s + 1;
    }
    return s;
  }
  int m20(int a, int b) {
    int s = a * 20 + b;
    if (s > 6) {
      s = s - f(a, b);
    }
    while (s < 20) {
      s = s + 1;
    }
    return s;
  }
  int m21(int a, int b) {
    int s = a * 21 + b;
    if (s > 0) {
      s = s - f(a, b);
    }
    while (s < 21) {
      s = s + 1;
    }
    return s;
  }
  int m22(int a, int b) {
    int s = a * 22 + b;
    if (s > 1) {
      s = s - f(a, b);
    }
    while (s < 22) {
      s = s + 1;
    }
    return s;
  }
  int m23(int a, int b) {
    int s = a * 23 + b;
    if (s > 2) {
      s = s - f(a, b);
    }
    while (s < 23) {
      s = s + 1;
    }
    return s;
  }
  int m24(int a, int b) {
    int s = a * 24 + b;
    if (s > 3) {
      s = s - f(a, b);
    }
    while (s < 24) {
      s = s + 1;
    }
    return s;
  }
  int m25(int a, int b) {
    int s = a * 25 + b;
    if (s > 4) {
      s = s - f(a, b);
    }
    while (s < 25) {
      s = s + 1;
    }
    return s;
  }
  int m26(int a, int b) {
    int s = a * 26 + b;
    if (s > 5) {
      s = s - f(a, b);
    }
    while (s < 26) {
      s = s + 1;
    }
    return s;
  }
  int m27(int a, int b) {
    int s = a * 27 + b;
    if (s > 6) {
      s = s - f(a, b);
    }
    while (s < 27) {
      s = s + 1;
    }
    return s;
  }
  int m28(int a, int b) {
    int s = a * 28 + b;
    if (s > 0) {
      s = s - f(a, b);
    }
    while (s < 28) {
      s = s + 1;
    }
    return s;
  }
  int m29(int a, int b) {
    int s = a * 29 + b;
    if (s > 1) {
      s = s - f(a, b);
    }
    while (s < 29) {
      s = s + 1;
    }
    return s;
  }
  int m30(int a, int b) {
    int s = a * 30 + b;
    if (s > 2) {
      s = s - f(a, b);
    }
    while (s < 30) {
      s = s + 1;
    }
    return s;
  }
  int m31(int a, int b) {
    int s = a * 31 + b;
    if (s > 3) {
      s = s - f(a, b);
    }
    while (s < 31) {
      s = s + 1;
    }
    return s;
  }
  int m32(int a, int b) {
    int s = a * 32 + b;
    if (s > 4) {
      s = s - f(a, b);
    }
    while (s < 32) {
      s = s + 1;
    }
    return s;
  }
  int m33(int a, int b) {
    int s = a * 33 + b;
    if (s > 5) {
      s = s - f(a, b);
    }
    while (s < 33) {
      s = s + 1;
    }
    return s;
  }
  int m34(int a, int b) {
    int s = a * 34 + b;
    if (s > 6) {
      s = s - f(a, b);
    }
    while (s < 34) {
      s = s + 1;
    }
    return s;
  }
  int m35(int a, int b) {
    int s = a * 35 + b;
    if (s > 0) {
      s = s - f(a, b);
    }
    while (s < 35) {
      s = s + 1;
    }
    return s;
  }
  int m36(int a, int b) {
    int s = a * 36 + b;
    if (s > 1) {
      s = s - f(a, b);
    }
    while (s < 36) {
      s = s + 1;
    }
    return s;
  }
  int m37(int a, int b) {
    int s = a * 37 + b;
    if (s > 2) {
      s = s - f(a, b);
    }
    while (s < 37) {
      s = s + 1;
    }
    return s;
  }
  int m38(int a, int b) {
    int s = a * 38 + b;
    if (s > 3) {
      s = s - f(a, b);
    }
    while (s < 38) {
      s = s + 1;
    }
    return s;
  }
  int m39(int a, int b) {
    int s = a * 39 + b;
    if (s > 4) {
      s = s - f(a, b);
    }
    while (s < 39) {
      s = s + 1;
    }
    return s;
  }
  int m40(int a, int b) {
    int s = a * 40 + b;
    if (s > 5) {
      s = s - f(a, b);
    }
    while (s < 40) {
      s = s + 1;
    }
    return s;
  }
  int m41(int a, int b) {
    int s = a * 41 + b;
    if (s > 6) {
      s = s - f(a, b);
    }
    while (s < 41) {
      s = s + 1;
    }
    return s;
  }
  int m42(int a, int b) {
    int s = a * 42 + b;
    if (s > 0) {
      s = s - f(a, b);
    }
    while (s < 42) {
      s = s + 1;
    }
    return s;
  }
  int m43(int a, int b) {
    int s = a * 43 + b;
    if (s > 1) {
      s = s - f(a, b);
    }
    while (s < 43) {
      s = s + 1;
    }
    return s;
  }
  int m44(int a, int b) {
    int s = a * 44 + b;
    if (s > 2) {
      s = s - f(a, b);
    }
    while (s < 44) {
      s = s + 1;
    }
    return s;
  }
  int m45(int a, int b) {
    int s = a * 45 + b;
    if (s > 3) {
      s = s - f(a, b);
    }
    while (s < 45) {
      s = s + 1;
    }
    return s;
  }
  int m46(int a, int b) {
    int s = a * 46 + b;
    if (s > 4) {
      s = s - f(a, b);
    }
    while (s < 46) {
      s = s + 1;
    }
    return s;
  }
  int m47(int a, int b) {
    int s = a * 47 + b;
    if (s > 5) {
      s = s - f(a, b);
    }
    while (s < 47) {
      s = s + 1;
    }
    return s;
  }
  int m48(int a, int b) {
    int s = a * 48 + b;
    if (s > 6) {
      s = s - f(a, b);
    }
    while (s < 48) {
      s = s + 1;
    }
    return s;
  }
  int m49(int a, int b) {
    int s = a * 49 + b;
    if (s > 0) {
      s = s - f(a, b);
    }
    while (s < 49) {
      s = s + 1;
    }
    return s;
  }
  int m50(int a, int b) {
    int s = a * 50 + b;
    if (s > 1) {
      s = s - f(a, b);
    }
    while (s < 50) {
      s = s + 1;
    }
    return s;
  }
  int m51(int a, int b) {
    int s = a * 51 + b;
    if (s > 2) {
      s = s - f(a, b);
    }
    while (s < 51) {
      s = s + 1;
    }
    return s;
  }
  int m52(int a, int b) {
    int s = a * 52 + b;
    if (s > 3) {
      s = s - f(a, b);
    }
    while (s < 52) {
      s = s + 1;
    }
    return s;
  }
  int m53(int a, int b) {
    int s = a * 53 + b;
    if (s > 4) {
      s = s - f(a, b);
    }
    while (s < 53) {
      s = s + 1;
    }
    return s;
  }
  int m54(int a, int b) {
    int s = a * 54 + b;
    if (s > 5) {
      s = s - f(a, b);
    }
    while (s < 54) {
      s = s + 1;
    }
    return s;
  }
  int m55(int a, int b) {
    int s = a * 55 + b;
    if (s > 6) {
      s = s - f(a, b);
    }
    while (s < 55) {
      s = s + 1;
    }
    return s;
  }
  int m56(int a, int b) {
    int s = a * 56 + b;
    if (s > 0) {
      s = s - f(a, b);
    }
    while (s < 56) {
      s = s + 1;
    }
    return s;
  }
  int m57(int a, int b) {
    int s = a * 57 + b;
    if (s > 1) {
      s = s - f(a, b);
    }
    while (s < 57) {
      s = s + 1;
    }
    return s;
  }
  int m58(int a, int b) {
    int s = a * 58 + b;
    if (s > 2) {
      s = s - f(a, b);
    }
    while (s < 58) {
      s = s + 1;
    }
    return s;
  }
  int m59(int a, int b) {
    int s = a * 59 + b;
    if (s > 3) {
      s = s - f(a, b);
    }
    while (s < 59) {
      s = s + 1;
    }
    return s;
  }
  int m60(int a, int b) {
    int s = a * 60 + b;
    if (s > 4) {
      s = s - f(a, b);
    }
    while (s < 60) {
      s = s + 1;
    }
    return s;
  }
  int m61(int a, int b) {
    int s = a * 61 + b;
    if (s > 5) {
      s = s - f(a, b);
    }
    while (s < 61) {
      s = s + 1;
    }
    return s;
  }
  int m62(int a, int b) {
    int s = a * 62 + b;
    if (s > 6) {
      s = s - f(a, b);
    }
    while (s < 62) {
      s = s + 1;
    }
    return s;
  }
  int m63(int a, int b) {
    int s = a * 63 + b;
    if (s > 0) {
      s = s - f(a, b);
    }
    while (s < 63) {
      s = s + 1;
    }
    return s;
  }
  int m64(int a, int b) {
    int s = a * 64 + b;
    if (s > 1) {
      s = s - f(a, b);
    }
    while (s < 64) {
      s = s + 1;
    }
    return s;
  }
  int m65(int a, int b) {
    int s = a * 65 + b;
    if (s > 2) {
      s = s - f(a, b);
    }
    while (s < 65) {
      s = s + 1;
    }
    return s;
  }
  int m66(int a, int b) {
    int s = a * 66 + b;
    if (s > 3) {
      s = s - f(a, b);
    }
    while (s < 66) {
      s = s + 1;
    }
    return s;
  }
  int m67(int a, int b) {
    int s = a * 67 + b;
    if (s > 4) {
      s = s - f(a, b);
    }
    while (s < 67) {
      s = s + 1;
    }
    return s;
  }
  int m68(int a, int b) {
    int s = a * 68 + b;
    if (s > 5) {
      s = s - f(a, b);
    }
    while (s < 68) {
      s = s + 1;
    }
    return s;
  }
  int m69(int a, int b) {
    int s = a * 69 + b;
    if (s > 6) {
      s = s - f(a, b);
    }
    while (s < 69) {
      s = s + 1;
    }
    return s;
  }
  int m70(int a, int b) {
    int s = a * 70 + b;
    if (s > 0) {
      s = s - f(a, b);
    }
    while (s < 70) {
      s = s + 1;
    }
    return s;
  }
  int m71(int a, int b) {
    int s = a * 71 + b;
    if (s > 1) {
      s = s - f(a, b);
    }
    while (s < 71) {
      s = s + 1;
    }
    return s;
  }
  int m72(int a, int b) {
    int s = a * 72 + b;
    if (s > 2) {
      s = s - f(a, b);
    }
    while (s < 72) {
      s = s + 1;
    }
    return s;
  }
  int m73(int a, int b) {
    int s = a * 73 + b;
    if (s > 3) {
      s = s - f(a, b);
    }
    while (s < 73) {
      s = s + 1;
    }
    return s;
  }
  int m74(int a, int b) {
    int s = a * 74 + b;
    if (s > 4) {
      s = s - f(a, b);
    }
    while (s < 74) {
      s = s + 1;
    }
    return s;
  }
  int m75(int a, int b) {
    int s = a * 75 + b;
    if (s > 5) {
      s = s - f(a, b);
    }
    while (s < 75) {
      s = s + 1;
    }
    return s;
  }
  int m76(int a, int b) {
    int s = a * 76 + b;
    if (s > 6) {
      s = s - f(a, b);
    }
    while (s < 76) {
      s = s + 1;
    }
    return s;
  }
  int m77(int a, int b) {
    int s = a * 77 + b;
    if (s > 0) {
      s = s - f(a, b);
    }
    while (s < 77) {
      s = s + 1;
    }
    return s;
  }
  int m78(int a, int b) {
    int s = a * 78 + b;
    if (s > 1) {
      s = s - f(a, b);
    }
    while (s < 78) {
      s = s + 1;
    }
    return s;
  }
  int m79(int a, int b) {
    int s = a * 79 + b;
    if (s > 2) {
      s = s - f(a, b);
    }
    while (s < 79) {
      s = s + 1;
    }
    return s;
  }
  int m80(int a, int b) {
    int s = a * 80 + b;
    if (s > 3) {
      s = s - f(a, b);
    }
    while (s < 80) {
      s = s + 1;
    }
    return s;
  }
  int m81(int a, int b) {
    int s = a * 81 + b;
    if (s > 4) {
      s = s - f(a, b);
    }
    while (s < 81) {
      s = s + 1;
    }
    return s;
  }
  int m82(int a, int b) {
    int s = a * 82 + b;
    if (s > 5) {
      s = s - f(a, b);
    }
    while (s < 82) {
      s = s + 1;
    }
    return s;
  }
  int m83(int a, int b) {
    int s = a * 83 + b;
    if (s > 6) {
      s = s - f(a, b);
    }
    while (s < 83) {
      s = s + 1;
    }
    return s;
  }
  int m84(int a, int b) {
    int s = a * 84 + b;
    if (s > 0) {
      s = s - f(a, b);
    }
    while (s < 84) {
      s = s + 1;
    }
    return s;
  }
  int m85(int a, int b) {
    int s = a * 85 + b;
    if (s > 1) {
      s = s - f(a, b);
    }
    while (s < 85) {
      s = s + 1;
    }
    return s;
  }
  int m86(int a, int b) {
    int s = a * 86 + b;
    if (s > 2) {
      s = s - f(a, b);
    }
    while (s < 86) {
      s = s + 1;
    }
    return s;
  }
  int m87(int a, int b) {
    int s = a * 87 + b;
    if (s > 3) {
      s = s - f(a, b);
    }
    while (s < 87) {
      s = s + 1;
    }
    return s;
  }
  int m88(int a, int b) {
    int s = a * 88 + b;
    if (s > 4) {
      s = s - f(a, b);
    }
    while (s < 88) {
      s = s + 1;
    }
    return s;
  }
  int m89(int a, int b) {
    int s = a * 89 + b;
    if (s > 5) {
      s = s - f(a, b);
    }
    while (s < 89) {
      s = s + 1;
    }
    return s;
  }
  int m90(int a, int b) {
    int s = a * 90 + b;
    if (s > 6) {
      s = s - f(a, b);
    }
    while (s < 90) {
      s = s + 1;
    }
    return s;
  }
  int m91(int a, int b) {
    int s = a * 91 + b;
    if (s > 0) {
      s = s - f(a, b);
    }
    while (s < 91) {
      s = s + 1;
    }
    return s;
  }
  int m92(int a, int b) {
    int s = a * 92 + b;
    if (s > 1) {
      s = s - f(a, b);
    }
    while (s < 92) {
      s = s + 1;
    }
    return s;
  }
  int m93(int a, int b) {
    int s = a * 93 + b;
    if (s > 2) {
      s = s - f(a, b);
    }
    while (s < 93) {
      s = s + 1;
    }
    return s;
  }
  int m94(int a, int b) {
    int s = a * 94 + b;
    if (s > 3) {
      s = s - f(a, b);
    }
    while (s < 94) {
      s = s + 1;
    }
    return s;
  }
  int m95(int a, int b) {
    int s = a * 95 + b;
    if (s > 4) {
      s = s - f(a, b);
    }
    while (s < 95) {
      s = s + 1;
    }
    return s;
  }
  int m96(int a, int b) {
    int s = a * 96 + b;
    if (s > 5) {
      s = s - f(a, b);
    }
    while (s < 96) {
      s = s + 1;
    }
    return s;
  }
  int m97(int a, int b) {
    int s = a * 97 + b;
    if (s > 6) {
      s = s - f(a, b);
    }
    while (s < 97) {
      s = s + 1;
    }
    return s;
  }
  int m98(int a, int b) {
    int s = a * 98 + b;
    if (s > 0) {
      s = s - f(a, b);
    }
    while (s < 98) {
      s = s + 1;
    }
    return s;
  }
  int pad992 = 992;
  int pad993 = 993;
  int pad994 = 994;
  int pad995 = 995;
  int pad996 = 996;
  int pad997 = 997;
  int pad998 = 998;
}
