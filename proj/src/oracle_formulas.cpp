// Oracle formulas, one per registry id. These are transcribed directly from
// the printed displays and deliberately avoid the registry helpers.

#include <map>

#include "fibharm/oracle.hpp"

namespace fibharm::oracle {

namespace {

// G_0 L_{tk-s} - G_{tk-s}, and its variant with L_{tk+s}
const std::string X = "(G(0)*L(t*k-s)-G(t*k-s))";
const std::string Xp = "(G(0)*L(t*k+s)-G(t*k-s))";
const std::string T = "G(t*k+s)/L(t)^k";

const std::string odd_core =
    "(-1)^(n-k+1)*C(n,k)*C(2*(n-k-1),n-k-1)/(C(2*(r+n-k),r+1)*C(r+n-k,r+1))";

std::map<std::string, Formula, std::less<>> build() {
    std::map<std::string, Formula, std::less<>> f;

    // ABEL-FIB
    f["shift-binom"] = {
        "sum(k,1,n,F(k+r+2)/C(t+k+s,t+1))",
        "sum(k,1,n,F(k+r+1)/C(t+k+s,t+1)) - F(n+r+1)/C(t+n+s+1,t+1)"
        " + sum(k,1,n,F(k+r+1)/C(t+k+s+1,t+1)) + F(r+1)/C(s+t+1,t+1)"};
    f["shift-simple"] = {
        "sum(k,1,n,F(k+r+2)/(k+s))",
        "sum(k,1,n,(2*k+3)*F(k+r+1)/((k+s)*(k+s+1))) + F(r+1)/(s+1) - F(n+r+1)/(n+s+1)"};
    f["harm-shift"] = {
        "sum(k,1,n,(H(t)-H(k+t+s-1))/C(t+k+s-1,t+1)*F(k+r-1))",
        "sum(k,1,n,(H(t)-H(k+t+s-1))/C(t+k+s-1,t+1)*F(k+r+1))"
        " - sum(k,1,n,(H(t)-H(k+t+s))/C(t+k+s,t+1)*F(k+r+1))"
        " + (H(t)-H(n+t+s))/C(n+t+s,t+1)*F(n+r+1) - (H(t)-H(s+t))/C(t+s,t+1)*F(r+1)"};
    f["prodFF-H"] = {
        "sum(k,1,n,H(k)/k*F(k-2)*F(k+1))",
        "sum(k,1,n-1,(H(k+1)-1)/(k*(k+1))*F(k)^2) + H(n)/n*F(n)^2"};
    f["prodFF-O"] = {
        "sum(k,1,n,2^(2*k)/k*O(k)/C(2*k,k)*F(k-2)*F(k+1))",
        "2*sum(k,1,n-1,2^(2*k)/(k*(k+1))*(O(k+1)-1)/C(2*(k+1),k+1)*F(k)^2) + 2^(2*n)/n*O(n)/C(2*n,n)*F(n)^2"};
    f["prodFF-gen"] = {
        "sum(k,1,n,(H(k+s+t)-H(t))/C(k+s+t,t+1)*F(k+r-1)*F(k+r+2))",
        "(t+1)/(t+2)*sum(k,1,n,(H(k+s+t)-H(t+1))/C(k+s+t,t+2)*F(k+r)^2)"
        " - (H(s+t)-H(t))/C(s+t,t+1)*F(r+1)^2 + (H(n+s+t)-H(t))/C(n+s+t,t+1)*F(n+r+1)^2"};
    f["fib4-sq"] = {
        "sum(k,1,n,F(4*(k+r)+2)/C(k+t+s-1,t+1))",
        "(t+1)/(t+2)*sum(k,1,n,F(2*(k+r)+2)^2/C(k+t+s,t+2))"
        " + F(2*(n+r)+2)^2/C(n+t+s,t+1) - F(2*(r+1))^2/C(t+s,t+1)"};
    f["fib4-sq-simple"] = {
        "sum(k,1,n,F(4*(k+r)+2)/(k+s-1))",
        "sum(k,1,n,F(2*(k+r)+2)^2/((k+s)*(k+s-1))) + F(2*(n+r)+2)^2/(n+s) - F(2*(r+1))^2/s"};
    f["fib4-sq-H"] = {
        "sum(k,1,n,(H(t)-H(k+t+s-1))/C(k+t+s-1,t+1)*F(4*(k+r)+2))",
        "(t+1)/(t+2)*sum(k,1,n,(H(t+1)-H(k+t+s))/C(k+t+s,t+2)*F(2*(k+r)+2)^2)"
        " + (H(t)-H(n+t+s))/C(n+t+s,t+1)*F(2*(n+r)+2)^2 - (H(t)-H(t+s))/C(t+s,t+1)*F(2*(r+1))^2"};
    f["fib4-sq-H-simple"] = {
        "sum(k,1,n,H(k+s-1)/(k+s-1)*F(4*(k+r)+2))",
        "sum(k,1,n,(H(k+s)-1)/((k+s)*(k+s-1))*F(2*(k+r)+2)^2)"
        " + H(n+s)/(n+s)*F(2*(n+r)+2)^2 - H(s)/s*F(2*(r+1))^2"};
    f["rec-FF"] = {
        "sum(k,1,n,(-1)^(r*k)/(F(r*k)*F(r*(k+1)))*H(k+s-1))",
        "1/F(r)^2*(sum(k,1,n,F(r*(k+2))/F(r*(k+1))/(k+s)) - F(r*(n+2))/F(r*(n+1))*H(n+s) + L(r)*H(s))"};
    f["rec-FF-part"] = {
        "sum(k,1,n,(-1)^k/(F(k)*F(k+1))*H(k))",
        "sum(k,1,n,F(k)/F(k+1)/(k+1)) - F(n)/F(n+1)*H(n+1)"};
    f["rec-FL"] = {
        "sum(k,1,n,(-1)^(r*k)/(F(r*k)*F(r*(k+1)))*H(k+s-1))",
        "1/(2*F(r))*(sum(k,1,n,L(r*(k+1))/F(r*(k+1))/(k+s)) - L(r*(n+1))/F(r*(n+1))*H(n+s) + L(r)/F(r)*H(s))"};
    f["rec-FL-cor"] = {
        "sum(k,1,n,L(r*(k+1))/F(r*(k+1))/(k+s))",
        "2/F(r)*sum(k,1,n,F(r*(k+2))/F(r*(k+1))/(k+s))"
        " + (L(r*(n+1)) - 2/F(r)*F(r*(n+2)))*H(n+s)/F(r*(n+1)) + L(r)/F(r)*H(s)"};
    f["rec-odd"] = {
        "sum(k,1,n,F(r*(2*k+1))/(F(2*r*k)*F(2*r*(k+1)))*H(k+s-1))",
        "1/L(r)*(sum(k,1,n,1/F(2*r*(k+1))/(k+s)) - H(n+s)/F(2*r*(n+1)) + H(s)/F(2*r))"};
    f["rec-odd-part"] = {
        "sum(k,1,n,F(2*k+1)/(F(2*k)*F(2*k+2))*H(k))",
        "sum(k,1,n,1/F(2*k+2)/(k+1)) - H(n+1)/F(2*n+2) + 1"};
    f["rec-sq"] = {
        "sum(k,1,n,F(r*(2*k+1))/(F(r*k)^2*F(r*(k+1))^2)*H(k+s-1))",
        "1/F(r)*(sum(k,1,n,1/F(r*(k+1))^2/(k+s)) - H(n+s)/F(r*(n+1))^2 + H(s)/F(r)^2)"};
    f["rec-sq-part"] = {
        "sum(k,1,n,F(4*k+2)/(F(2*k)^2*F(2*k+2)^2)*H(k))",
        "sum(k,1,n,1/F(2*k+2)^2/(k+1)) - H(n+1)/F(2*n+2)^2 + 1"};
    f["rec-quad"] = {
        "sum(k,1,n,F(2*r*(k+1))/(F(r*k)*F(r*(k+1))^2*F(r*(k+2)))*H(k+s-1))",
        "1/F(r)*(sum(k,1,n,1/(F(r*(k+1))*F(r*(k+2)))/(k+s))"
        " - H(n+s)/(F(r*(n+1))*F(r*(n+2))) + H(s)/(F(r)*F(2*r)))"};
    f["rec-quad-part"] = {
        "sum(k,1,n,F(4*k+4)/(F(2*k)*F(2*k+2)^2*F(2*k+4))*H(k))",
        "sum(k,1,n,1/(F(2*k+2)*F(2*k+4))/(k+1)) - H(n+1)/(F(2*n+2)*F(2*n+4)) + 1/3"};
    f["conv-sq"] = {"sum(k,0,n,H(k)*F(n-k)^2)", "sum(k,0,n,F(n-k)*F(n-k-1)/(k+1))"};
    f["gib-sq"] = {
        "sum(k,0,n,H(k)*G(k+1)^2)",
        "H(n+1)*G(n+1)*G(n+2) - sum(k,0,n,G(k+1)*G(k+2)/(k+1))"};
    f["gib-prod"] = {
        "-sum(k,0,n,1/(k+s)*prod(j,0,2*m-1,G(k+r+j+1))) + H(n+s)*prod(j,0,2*m-1,G(n+r+j+1))"
        " - H(s-1)*prod(j,0,2*m-1,G(j+r))",
        "even(m)*F(m)*sum(k,0,n,H(k+s-1)*(G(k+m+r-1)+G(k+m+r+1))*prod(j,1,2*m-1,G(k+r+j)))"
        " + odd(m)*L(m)*sum(k,0,n,H(k+s-1)*G(k+m+r)*prod(j,1,2*m-1,G(k+r+j)))"};

    // ABEL-COMB
    f["comb-O-F"] = {
        "sum(k,1,n,(-1)^(k-1)*C(2*k,k)/2^(2*k)*O(k)*F(k-1))",
        "sum(k,1,n,(-1)^(k-1)*C(2*k,k)/2^(2*k)*(2*k+1)*(O(k+1)-1)*F(k+1))"
        " + (-1)^n*C(2*n,n)/2^(2*n)*(2*n+1)*(O(n+1)-1)*F(n)"};
    f["comb-H-G"] = {
        "sum(k,1,n,C(r,k+s)*(H(r)-H(r-k-s))*G(k+t))",
        "sum(k,1,n,C(r-1,k+s)*(H(r-1)-H(r-k-s-1))*G(k+t+2)) + C(r-1,s)*(H(r-1)-H(r-s-1))*G(t+1)"
        " - C(r-1,n+s)*(H(r-1)-H(r-s-n-1))*G(n+t+1)"};
    f["comb-H-G-base"] = {
        "sum(k,1,n,C(r,k+s)*G(k+t))",
        "sum(k,1,n,C(r-1,k+s)*G(k+t+2)) + C(r-1,s)*G(t+1) - C(r-1,n+s)*G(n+t+1)"};
    f["comb-H-G-x"] = {
        "sum(k,1,n,C(r,k+s)*x^k)",
        "sum(k,1,n,x^k*(1+x)*C(r-1,k+s)) + x*C(r-1,s) - x^(n+1)*C(r-1,n+s)"};
    f["comb-H-G-s"] = {
        "sum(k,1,n,C(r,k+s)*(H(r-k-s)-H(k+s))*G(k+t))",
        "sum(k,1,n,C(r-1,k+s)*(H(r-1-k-s)-H(k+s))*G(k+t+2)) + C(r-1,s)*(H(r-1-s)-H(s))*G(t+1)"
        " - C(r-1,n+s)*(H(r-1-n-s)-H(n+s))*G(n+t+1)"};
    f["comb-G3"] = {
        "sum(k,1,n,C(r,k+s)*(H(r)-H(r-k-s))*G(3*k+t))",
        "2*sum(k,1,n,C(r-1,k+s)*(H(r-1)-H(r-k-s-1))*G(3*k+t+2)) + C(r-1,s)*(H(r-1)-H(r-s-1))*G(t+3)"
        " - C(r-1,n+s)*(H(r-1)-H(r-s-n-1))*G(3*n+t+3)"};
    f["comb-alt"] = {
        "sum(k,1,n,(-1)^k*C(r,k+s)*(H(r)-H(r-k-s))*G(k+t))",
        "sum(k,1,n,(-1)^(k+1)*C(r-1,k+s)*(H(r-1)-H(r-k-s-1))*G(k+t-1)) - C(r-1,s)*(H(r-1)-H(r-s-1))*G(t+1)"
        " + (-1)^n*C(r-1,n+s)*(H(r-1)-H(r-s-n-1))*G(n+t+1)"};

    // GOULD
    f["gould-base"] = {"sum(k,0,n,C(x,k)*y^k)", "sum(k,0,n,(-1)^k*C(n-x,k)*(1+y)^(n-k)*y^k)"};
    f["gould-G"] = {"sum(k,0,n,C(x,k)*G(k+t))", "sum(k,0,n,(-1)^k*C(n-x,k)*G(2*n-k+t))"};
    f["gould-H"] = {
        "sum(k,0,n,C(x,k)*(H(x)-H(x-k))*G(k+t))",
        "sum(k,0,n,(-1)^k*C(n-x,k)*(H(n-x)-H(n-x-k))*G(2*n-k+t))"};
    f["gould-O"] = {
        "sum(k,0,n,(-1)^k/2^(2*k)*O(k+1)*G(k+t))",
        "(2*n+1)*sum(k,0,n,(-1)^(k+1)*C(2*k,k)/(2^(2*k+1)*C(n,k))*(O(n+1)-O(n-k))*G(2*n-k+t))"};
    f["gould-cube"] = {
        "sum(k,0,n,C(x,k)*(H(x)-H(x-k))*G(k+t)*(G(2*k+t)-(-1)^k))",
        "sum(k,0,n,(-1)^k*2^(n-k)*C(n-x,k)*(H(n-x)-H(n-x-k))*G(2*n+k+t))"};
    const std::string lb = "C(n-b,k-b)*H(k-b)";
    const std::string rb = "C(b,n-k)*(H(b)+H(n-b)-H(b-n+k))";
    f["gould2-base"] = {"sum(k,0,n,(-1)^(n-k)*" + lb + "*(1+x)^k)", "sum(k,0,n," + rb + "*x^k)"};
    f["gould2-F"] = {"sum(k,0,n,(-1)^(n-k)*" + lb + "*F(2*k))", "sum(k,0,n," + rb + "*F(k))"};
    f["gould2-G"] = {"sum(k,0,n,(-1)^(n-k)*" + lb + "*G(2*k+t))", "sum(k,0,n," + rb + "*G(k+t))"};
    f["gould2-alt"] = {"sum(k,0,n,(-1)^(n-k)*" + lb + "*G(k+t))", "sum(k,0,n,(-1)^k*" + rb + "*G(k+t))"};
    f["gould2-3t"] = {"sum(k,0,n,(-1)^(n-k)*2^k*" + lb + "*G(2*k+t))", "sum(k,0,n," + rb + "*G(3*k+t))"};
    f["gould2-3t-alt"] = {
        "sum(k,0,n,(-1)^(n-k+1)*2^k*" + lb + "*G(k+t))", "sum(k,0,n,(-1)^k*" + rb + "*G(3*k+t))"};

    // BT-BOYAD
    f["bt-G-scaled"] = {
        "sum(k,0,n,(-1)^k*C(n,k)*G(t*k+r)/L(t)^k)",
        "(-1)^r/L(t)^n*(G(0)*L(t*n-r)-G(t*n-r))"};
    f["boyad-H-G"] = {
        "sum(k,0,n,(-1)^k*C(n,k)*L(t)^(n-k)*H(k)*G(t*k+r))",
        "(-1)^r*H(n)*(G(0)*L(t*n-r)-G(t*n-r)) - (-1)^r*sum(k,0,n-1,L(t)^(n-k)/(n-k)*(G(0)*L(t*k-r)-G(t*k-r)))"};
    f["boyad-H-F"] = {
        "sum(k,0,n,(-1)^k*C(n,k)*L(t)^(n-k)*H(k)*F(t*k+r))",
        "(-1)^(r+1)*H(n)*F(t*n-r) + (-1)^r*sum(k,0,n-1,L(t)^(n-k)*F(t*k-r)/(n-k))"};
    f["boyad-H-L"] = {
        "sum(k,0,n,(-1)^k*C(n,k)*L(t)^(n-k)*H(k)*L(t*k+r))",
        "(-1)^r*H(n)*L(t*n-r) - (-1)^r*sum(k,0,n-1,L(t)^(n-k)*L(t*k-r)/(n-k))"};
    f["boyad-HF-part"] = {"sum(k,0,n,(-1)^k*C(n,k)*H(k)*F(k))", "-H(n)*F(n) + sum(k,0,n-1,F(k)/(n-k))"};
    f["boyad-HL-part"] = {"sum(k,0,n,(-1)^k*C(n,k)*H(k)*L(k))", "H(n)*L(n) - sum(k,0,n-1,L(k)/(n-k))"};
    f["boyad-rev"] = {
        "sum(k,0,n,(-1)^(k+r)*C(n,k)*H(k)*L(t)^(n-k)*(G(0)*L(t*k-r)-G(t*k-r)))",
        "H(n)*G(t*n+r) - sum(k,0,n-1,L(t)^(n-k)*G(t*k+r)/(n-k))"};
    f["boyad-rev-F"] = {
        "sum(k,0,n,(-1)^(k+r+1)*C(n,k)*L(t)^(n-k)*H(k)*F(t*k-r))",
        "H(n)*F(t*n+r) - sum(k,0,n-1,L(t)^(n-k)*F(t*k+r)/(n-k))"};
    f["boyad-rev-L"] = {
        "sum(k,0,n,(-1)^(k+r)*C(n,k)*L(t)^(n-k)*H(k)*L(t*k-r))",
        "H(n)*L(t*n+r) - sum(k,0,n-1,L(t)^(n-k)*L(t*k+r)/(n-k))"};
    f["bt2-m"] = {
        "sum(k,0,n,(-1)^(k+1)*C(n,k)*m*G(k)*H(k+m)/(k+m))",
        "sum(k,0,n,(-1)^k*C(n,k)/C(k+m,m)*G(n-2*k)*(H(k+m)-H(k)))"};
    f["bt2-m-sym"] = {
        "sum(k,0,n,(-1)^(k+1)*C(n,k)/C(k+m,m)*G(k)*(H(k+m)-H(k)))",
        "sum(k,0,n,(-1)^k*C(n,k)*m/(k+m)*G(n-2*k)*H(k+m))"};
    f["bt2-m1a"] = {
        "sum(k,0,n,(-1)^(k+1)*C(n,k)*G(k)*H(k+1)/(k+1))", "sum(k,0,n,(-1)^k*C(n,k)*G(n-2*k)/(k+1)^2)"};
    f["bt2-m1b"] = {
        "sum(k,0,n,(-1)^(k+1)*C(n,k)*G(k)/(k+1)^2)", "sum(k,0,n,(-1)^k*C(n,k)*G(n-2*k)*H(k+1)/(k+1))"};
    f["prop1-ln2-a"] = {
        "2*sum(k,0,n,(-1)^(k+1)*C(n,k)*(ln2-O(k))/(2*k-1)*G(k))",
        "sum(k,0,n,(-1)^k*2^(2*k)*C(n,k)/C(2*k,k)*(2*O(k)-H(k)-2*ln2)*G(n-2*k))"};
    f["prop1-ln2-b"] = {
        "sum(k,0,n,(-1)^(k+1)*2^(2*k)*C(n,k)/C(2*k,k)*(2*O(k)-H(k)-2*ln2)*G(k))",
        "2*sum(k,0,n,(-1)^(k+1)*C(n,k)*(O(k)-ln2)/(2*k-1)*G(n-2*k))"};
    f["prop1-a"] = {
        "sum(k,0,n,(-1)^(k+1)*C(n,k)*G(k)/(2*k-1))",
        "sum(k,0,n,(-1)^(k+1)*2^(2*k)*C(n,k)/C(2*k,k)*G(n-2*k))"};
    f["prop1-b"] = {
        "sum(k,0,n,(-1)^(k+1)*C(n,k)*O(k)*G(k)/(2*k-1))",
        "sum(k,0,n,(-1)^k*2^(2*k-1)*C(n,k)/C(2*k,k)*(H(k)-2*O(k))*G(n-2*k))"};
    f["prop2-a"] = {
        "sum(k,0,n,(-1)^k*C(n,k)*G(n-2*k)/(2*k-1))", "sum(k,0,n,(-1)^k*2^(2*k)*C(n,k)/C(2*k,k)*G(k))"};
    f["prop2-b"] = {
        "sum(k,0,n,(-1)^(k+1)*C(n,k)*O(k)*G(n-2*k)/(2*k-1))",
        "sum(k,0,n,(-1)^(k+1)*2^(2*k-1)*C(n,k)/C(2*k,k)*(2*O(k)-H(k))*G(k))"};
    f["bt3"] = {
        "sum(k,1,n,(-1)^(k+1)*C(n,k)*G(k)*H(k+m))",
        "G(n)*H(m) + sum(k,1,n,(-1)^(k+1)*C(n,k)/C(k+m,m)*G(n-2*k)/k)"};
    f["bt3-sym"] = {
        "sum(k,1,n,(-1)^k*C(n,k)/C(k+m,m)*G(k)/k)", "sum(k,0,n,(-1)^k*C(n,k)*G(n-2*k)*H(k+m))"};
    f["bt3-m0a"] = {"sum(k,1,n,(-1)^k*C(n,k)*G(k)*H(k))", "sum(k,1,n,(-1)^k*C(n,k)*G(n-2*k)/k)"};
    f["bt3-m0b"] = {"sum(k,1,n,(-1)^(k+1)*C(n,k)*G(k)/k)", "sum(k,1,n,(-1)^k*C(n,k)*G(n-2*k)*H(k))"};

    // BT-GQ
    const std::string tau = "(-1)^s/L(t)^k*" + X;
    const std::string thm_l = "(-1)^k*C(n,k)/C(r+m+n-k+1,m+1)*(H(m+1)-H(r+m+n-k+1))";
    const std::string thm_r1 = "(-1)^(n-k)*C(n,k)/C(r+m+n-k+1,r+1)*(H(m+n-k)-H(r+m+n-k+1))";
    const std::string thm_r2 = "(-1)^(n-k)*C(n,k)/C(r+m+n-k+1,r+1)";
    f["gq-thm"] = {
        "sum(k,0,n," + thm_l + "*" + T + ")",
        "(m+1)/(r+1)*sum(k,0,n," + thm_r1 + "*" + tau + ") + 1/(r+1)*sum(k,0,n," + thm_r2 + "*" + tau + ")"};
    f["gq-thm2"] = {
        "sum(k,0,n," + thm_l + "*" + tau + ")",
        "(m+1)/(r+1)*sum(k,0,n," + thm_r1 + "*" + T + ") + 1/(r+1)*sum(k,0,n," + thm_r2 + "*" + T + ")"};

    const std::string m0_r1 = "C(n,k)/C(r+n-k+1,r+1)*(H(n-k)-H(r+n-k+1))";
    const std::string m0_r2 = "C(n,k)/C(r+n-k+1,r+1)";
    f["gq-cor-m0"] = {
        "sum(k,0,n,(-1)^k*C(n,k)*(1-H(r+n-k+1))/(r+n-k+1)*" + T + ")",
        "1/(r+1)*sum(k,0,n,(-1)^(n-k-s)*" + m0_r1 + "*" + X + "/L(t)^k)"
        " + 1/(r+1)*sum(k,0,n,(-1)^(n-k-s)*" + m0_r2 + "*" + X + "/L(t)^k)"};
    f["gq-cor2-m0"] = {
        "sum(k,0,n,(-1)^(k-s)*C(n,k)*(1-H(r+n-k+1))/(r+n-k+1)*" + X + "/L(t)^k)",
        "1/(r+1)*sum(k,0,n,(-1)^(n-k)*" + m0_r1 + "*" + T + ") + 1/(r+1)*sum(k,0,n,(-1)^(n-k)*" + m0_r2 + "*" +
            T + ")"};

    auto part_rhs = [](const std::string& y) {
        return "sum(k,0,n,(-1)^(n-k-s)*C(n,k)*" + y + "/((n-k+1)*L(t)^k)) - sum(k,0,n,(-1)^(n-k-s)*C(n,k)*" + y +
               "/((n-k+1)^2*L(t)^k))";
    };
    auto part_lhs = [](const std::string& y) {
        return "sum(k,0,n,(-1)^k*C(n,k)*(1-H(n-k+1))/(n-k+1)*" + y + "/L(t)^k)";
    };
    f["gq-cor-m0-part"] = {part_lhs("G(t*k+s)"), part_rhs(Xp)};
    f["gq-cor-m0-part[tk-s]"] = {part_lhs("G(t*k+s)"), part_rhs(X)};
    f["gq-cor2-m0-part"] = {part_lhs(Xp), part_rhs("G(t*k+s)")};
    f["gq-cor2-m0-part[tk-s]"] = {part_lhs(X), part_rhs("G(t*k+s)")};

    const std::string odd_l = "(-1)^(k+1)*C(n,k)/C(2*(r+n-k),r+n-k)*2^(2*(r+n-k)+1)*O(r+n-k)";
    f["gq-cor-odd"] = {
        "sum(k,0,n," + odd_l + "*" + T + ")",
        "2^(2*(r+1))/(r+1)*sum(k,0,n-1,(-1)^s*" + odd_core + "*(O(n-k-1)-O(r+n-k))*" + X + "/L(t)^k)"
        " + 2^(2*(r+1))/(r+1)*sum(k,0,n-1,(-1)^s*" + odd_core + "*" + X + "/L(t)^k)"
        " + (-1)^s/(r+1)^2*C(2*r,r)*(1-O(r))*(G(0)*L(t*n-s)-G(t*n-s))/L(t)^n"};
    f["gq-cor2-odd"] = {
        "sum(k,0,n,(-1)^s*" + odd_l + "*" + X + "/L(t)^k)",
        "2^(2*(r+1))/(r+1)*sum(k,0,n-1," + odd_core + "*(O(n-k-1)-O(r+n-k))*" + T + ")"
        " + 2^(2*(r+1))/(r+1)*sum(k,0,n-1," + odd_core + "*" + T + ")"
        " + (-1)^s/(r+1)^2*C(2*r,r)*(1-O(r))*G(t*n+s)/L(t)^n"};

    const std::string oddp_l = "(-1)^(k+1)*2^(2*(n-k))*C(n,k)/C(2*n-2*k,n-k)*O(n-k)";
    const std::string oddp_r1 = "(-1)^(n-k+s+1)*C(n,k)*C(2*(n-k-1),n-k-1)/(n-k)^2";
    const std::string oddp_r2 = "(-1)^(n-k+s+1)*C(n,k)*C(2*(n-k-1),n-k-1)/((n-k)^2*(2*n-2*k-1))";
    f["gq-cor-odd-part"] = {
        "sum(k,0,n," + oddp_l + "*" + T + ")",
        "sum(k,0,n-1," + oddp_r1 + "*" + X + "/L(t)^k) - sum(k,0,n-1," + oddp_r2 + "*" + X + "/L(t)^k)"};
    f["gq-cor2-odd-part"] = {
        "sum(k,0,n," + oddp_l + "*" + X + "/L(t)^k)",
        "sum(k,0,n-1," + oddp_r1 + "*" + T + ") - sum(k,0,n-1," + oddp_r2 + "*" + T + ")"};
    return f;
}

}  // namespace

const Formula* formula_for(std::string_view key) {
    static const auto table = build();
    auto it = table.find(key);
    return it == table.end() ? nullptr : &it->second;
}

}  // namespace fibharm::oracle
